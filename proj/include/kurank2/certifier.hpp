#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kurank2/catalog.hpp"

namespace kurank2 {

enum class BaseReason { Threshold, UnitNorm, SerreOrbit };
enum class NodeKind { Base, Split, Multiple };

std::string to_string(BaseReason r);
std::string to_string(NodeKind k);

// One vertex of the decomposition DAG. Children always have smaller ids.
struct CertNode {
  NodeKind kind = NodeKind::Base;
  LatticeVector v;
  // Base
  BaseReason reason = BaseReason::Threshold;
  // Split
  LatticeVector v_plus;
  LatticeVector v_minus;
  Wide chi_cross = 0;
  Rational delta_sin_sq;
  std::size_t plus_child = 0;
  std::size_t minus_child = 0;
  // Multiple: v = multiplicity * nodes[child].v
  Int multiplicity = 1;
  std::size_t child = 0;
};

struct Certificate {
  FanoLabel entry;
  LatticeVector root_vector;
  std::size_t root = 0;
  std::vector<CertNode> nodes;

  std::size_t depth() const;
};

class DecisionMemo;

// Shared cache of per-vector decisions, safe for concurrent insert-or-get.
class CertifyCache {
 public:
  CertifyCache();
  ~CertifyCache();
  CertifyCache(const CertifyCache&) = delete;
  CertifyCache& operator=(const CertifyCache&) = delete;
  std::size_t size() const;
  DecisionMemo& memo() { return *memo_; }

 private:
  std::unique_ptr<DecisionMemo> memo_;
};

Certificate certify(const FanoKuEntry& entry, LatticeVector v, CertifyCache* cache = nullptr);

struct CertifyFailure {
  LatticeVector v;
  std::string message;
};

struct CertifyReport {
  FanoLabel entry;
  Int norm_bound = 0;
  std::size_t vectors = 0;
  std::size_t certified = 0;
  std::size_t verified = 0;
  std::size_t max_depth = 0;
  std::size_t split_nodes = 0;
  bool all_splits_negative = true;
  std::vector<CertifyFailure> failures;
};

CertifyReport certify_all(const FanoKuEntry& entry, Int norm_bound, unsigned threads = 1);

struct VerifyResult {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

// Re-checks every node from raw matrix arithmetic and lattice primitives.
VerifyResult verify(const Certificate& cert);
VerifyResult verify(const Certificate& cert, const FanoKuEntry& entry);

// gldim(sigma) < 3 - delta(v), decided exactly
bool gldim_guard(const GldimBound& bound, const Rational& delta_sin_sq);

// primitive vectors with 0 < norm_sq <= bound, lexicographic
std::vector<LatticeVector> primitive_vectors(Int norm_bound);

}  // namespace kurank2
