#include "kurank2/certifier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

namespace kurank2 {

std::string to_string(BaseReason r) {
  switch (r) {
    case BaseReason::Threshold: return "threshold";
    case BaseReason::UnitNorm: return "unit-norm";
    case BaseReason::SerreOrbit: return "serre-orbit";
  }
  return "?";
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Base: return "base";
    case NodeKind::Split: return "split";
    case NodeKind::Multiple: return "multiple";
  }
  return "?";
}

std::size_t Certificate::depth() const {
  std::vector<std::size_t> d(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const CertNode& n = nodes[i];
    if (n.kind == NodeKind::Split) d[i] = 1 + std::max(d[n.plus_child], d[n.minus_child]);
    if (n.kind == NodeKind::Multiple) d[i] = 1 + d[n.child];
  }
  return nodes.empty() ? 0 : d[root];
}

namespace {

// what happens at one primitive vector, independent of the rest of the tree
struct Decision {
  bool base = false;
  BaseReason reason = BaseReason::Threshold;
  PickPair pair;
  Wide chi_cross = 0;
  Rational delta;
};

struct VectorHash {
  std::size_t operator()(LatticeVector v) const noexcept {
    return std::hash<Int>{}(v.a) * 1000003u ^ std::hash<Int>{}(v.b);
  }
};

}  // namespace

class DecisionMemo {
 public:
  template <class Make>
  Decision get_or_insert(LatticeVector v, Make&& make) {
    Shard& s = shards_[VectorHash{}(v) % kShards];
    {
      std::shared_lock lock(s.mutex);
      auto it = s.map.find(v);
      if (it != s.map.end()) return it->second;
    }
    // computed outside the lock; any racing insert stores the same value
    Decision d = make();
    std::unique_lock lock(s.mutex);
    return s.map.try_emplace(v, std::move(d)).first->second;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const Shard& s : shards_) {
      std::shared_lock lock(s.mutex);
      n += s.map.size();
    }
    return n;
  }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<LatticeVector, Decision, VectorHash> map;
  };
  std::array<Shard, kShards> shards_;
};

CertifyCache::CertifyCache() : memo_(std::make_unique<DecisionMemo>()) {}
CertifyCache::~CertifyCache() = default;
std::size_t CertifyCache::size() const { return memo_->size(); }

bool gldim_guard(const GldimBound& bound, const Rational& delta_sin_sq) {
  // delta <= 1/2, so 3 - delta >= 5/2
  const Rational five_halves(5, 2);
  if (bound.value < five_halves) return true;
  if (bound.value == five_halves) return bound.strict || delta_sin_sq < 1;
  // bound in (5/2, 3): compare delta with c = 3 - bound through sin^2(pi c)
  const Rational c = Rational(3) - bound.value;
  static const std::map<Rational, Rational> sin_sq{
      {Rational(1, 6), Rational(1, 4)}, {Rational(1, 4), Rational(1, 2)}, {Rational(1, 3), Rational(3, 4)}};
  auto it = sin_sq.find(c);
  if (it == sin_sq.end())
    fail(ErrorCode::PreconditionFailed, "gldim bound " + to_string(bound.value) + " has no exact sine table entry");
  return bound.strict ? delta_sin_sq <= it->second : delta_sin_sq < it->second;
}

namespace {

BaseReason base_reason(const FanoKuEntry& entry, LatticeVector v) {
  if (norm_sq(v) == 1) return BaseReason::UnitNorm;
  const auto& seeds = entry.base.serre_seeds;
  if (std::find(seeds.begin(), seeds.end(), v) != seeds.end()) return BaseReason::Threshold;
  for (LatticeVector seed : seeds) {
    LatticeVector u = seed;
    for (int k = 1; k < 12; ++k) {
      u = entry.serre.d(u);
      if (u == v) return BaseReason::SerreOrbit;
      if (u == seed) break;
    }
  }
  return BaseReason::Threshold;
}

Decision decide(const FanoKuEntry& entry, LatticeVector v) {
  Decision d;
  if (in_base(entry, v)) {
    d.base = true;
    d.reason = base_reason(entry, v);
    return d;
  }
  d.pair = pick_decompose(v);
  d.delta = Rational(BigInt(1), to_big(norm_sq(d.pair.plus)) * to_big(norm_sq(d.pair.minus)));
  if (!gldim_guard(entry.gldim, d.delta))
    fail(ErrorCode::ConditionFailed, "condition (b) fails at " + to_string(v) + ": gldim " +
                                         to_string(entry.gldim.value) + " is not below 3 - delta(v)");
  d.chi_cross = entry.euler(d.pair.plus, d.pair.minus);
  if (d.chi_cross >= 0)
    fail(ErrorCode::ConditionFailed, "condition (c) fails at " + to_string(v) + ": chi(v+,v-) = " +
                                         to_string(d.chi_cross) + " >= 0");
  return d;
}

class Builder {
 public:
  Builder(const FanoKuEntry& entry, CertifyCache* cache) : entry_(entry), cache_(cache) {}

  std::size_t build(LatticeVector v) {
    auto it = ids_.find(v);
    if (it != ids_.end()) return it->second;
    const Decision d = cache_ ? cache_->memo().get_or_insert(v, [&] { return decide(entry_, v); })
                              : decide(entry_, v);
    CertNode node;
    node.v = v;
    if (d.base) {
      node.kind = NodeKind::Base;
      node.reason = d.reason;
    } else {
      if (norm_sq(d.pair.plus) >= norm_sq(v) || norm_sq(d.pair.minus) >= norm_sq(v))
        fail(ErrorCode::InternalInvariant, "Pick pieces do not shrink at " + to_string(v));
      node.kind = NodeKind::Split;
      node.v_plus = d.pair.plus;
      node.v_minus = d.pair.minus;
      node.chi_cross = d.chi_cross;
      node.delta_sin_sq = d.delta;
      node.plus_child = build(d.pair.plus);
      node.minus_child = build(d.pair.minus);
    }
    nodes_.push_back(std::move(node));
    ids_.emplace(v, nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  std::vector<CertNode> take() { return std::move(nodes_); }

  void push(CertNode n) { nodes_.push_back(std::move(n)); }
  std::size_t size() const { return nodes_.size(); }

 private:
  const FanoKuEntry& entry_;
  CertifyCache* cache_;
  std::map<LatticeVector, std::size_t> ids_;
  std::vector<CertNode> nodes_;
};

}  // namespace

Certificate certify(const FanoKuEntry& entry, LatticeVector v, CertifyCache* cache) {
  if (!entry.certifiable)
    fail(ErrorCode::NonCertifiableEntry, to_string(entry.label) + " (" + entry.name + ") is not certifiable");
  if (v.a == 0 && v.b == 0) fail(ErrorCode::ZeroClass, "cannot certify the zero vector");
  Certificate cert;
  cert.entry = entry.label;
  cert.root_vector = v;
  Builder builder(entry, cache);
  const Int k = gcd_abs(v.a, v.b);
  if (k == 1) {
    cert.root = builder.build(v);
  } else {
    // direct sums of stable objects of class v/k are semistable of class v
    const LatticeVector v0{v.a / k, v.b / k};
    CertNode wrap;
    wrap.kind = NodeKind::Multiple;
    wrap.v = v;
    wrap.multiplicity = k;
    wrap.child = builder.build(v0);
    builder.push(wrap);
    cert.root = builder.size() - 1;
  }
  cert.nodes = builder.take();
  return cert;
}

std::vector<LatticeVector> primitive_vectors(Int norm_bound) {
  std::vector<LatticeVector> out;
  Int r = 0;
  while (static_cast<Wide>(r + 1) * (r + 1) <= norm_bound) ++r;
  for (Int a = -r; a <= r; ++a)
    for (Int b = -r; b <= r; ++b) {
      LatticeVector v{a, b};
      if (norm_sq(v) <= norm_bound && is_primitive(v)) out.push_back(v);
    }
  return out;
}

CertifyReport certify_all(const FanoKuEntry& entry, Int norm_bound, unsigned threads) {
  if (!entry.certifiable)
    fail(ErrorCode::NonCertifiableEntry, to_string(entry.label) + " (" + entry.name + ") is not certifiable");
  const std::vector<LatticeVector> vs = primitive_vectors(norm_bound);
  struct Outcome {
    bool certified = false;
    bool verified = false;
    std::size_t depth = 0;
    std::size_t splits = 0;
    bool negative = true;
    std::string error;
  };
  std::vector<Outcome> outcomes(vs.size());
  CertifyCache cache;
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < vs.size(); i += stride) {
      Outcome& o = outcomes[i];
      try {
        Certificate c = certify(entry, vs[i], &cache);
        o.certified = true;
        o.depth = c.depth();
        for (const CertNode& n : c.nodes) {
          if (n.kind != NodeKind::Split) continue;
          ++o.splits;
          if (n.chi_cross >= 0) o.negative = false;
        }
        VerifyResult r = verify(c, entry);
        o.verified = r.ok;
        if (!r.ok) o.error = "verify: " + r.failure;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ConditionFailed) throw;
        o.error = e.what();
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CertifyReport report;
  report.entry = entry.label;
  report.norm_bound = norm_bound;
  report.vectors = vs.size();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Outcome& o = outcomes[i];
    report.certified += o.certified;
    report.verified += o.verified;
    report.max_depth = std::max(report.max_depth, o.depth);
    report.split_nodes += o.splits;
    report.all_splits_negative = report.all_splits_negative && o.negative;
    if (!o.error.empty()) report.failures.push_back({vs[i], o.error});
  }
  return report;
}

}  // namespace kurank2
