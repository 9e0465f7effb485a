#include "mutalab/loops.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <unordered_map>

namespace mutalab {

LoopCheck symmetric_loop_witness(const ValuedQuiver& q, const MutationWord& w) {
  LoopCheck out;
  out.reduced = reduce(w, q.rank());
  if (out.reduced.empty() || out.reduced.support().size() < 2) {
    out.status = LoopStatus::Trivial;
    return out;
  }
  out.witness = symmetry_witness(q, apply(q, out.reduced));
  out.status = out.witness ? LoopStatus::SymmetricLoop : LoopStatus::NotALoop;
  return out;
}

std::optional<SymmetryWitness> word_symmetry(const ValuedQuiver& q, const MutationWord& w) {
  return symmetry_witness(q, apply(q, w));
}

namespace {

void require_finite(const ExchangeGraph& g) {
  if (!g.verdict().finite()) throw Error(ErrorCode::ClassNotFinite, "exchange graph verdict is not Finite");
}

void check_mutable_letters(const ExchangeGraph& g, const MutationWord& w) {
  for (Vertex v : w.letters()) {
    if (g.seed().is_frozen(v)) {
      throw Error(ErrorCode::MutateAtFrozenVertex, "vertex " + std::to_string(v + 1) + " is frozen");
    }
  }
}

// Node reached from `node` along w, via the successor table.
std::size_t walk(const ExchangeGraph& g, std::size_t node, const MutationWord& w) {
  for (Vertex v : w.letters()) node = static_cast<std::size_t>(g.successor(node, v));
  return node;
}

// Witnesses between class members, memoised by (from, to).
class WitnessCache {
 public:
  explicit WitnessCache(const ExchangeGraph& g) : g_(g) {}

  const std::optional<SymmetryWitness>& get(std::size_t from, std::size_t to) {
    const std::size_t key = from * g_.size() + to;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, symmetry_witness(g_.node(from), g_.node(to))).first;
    return it->second;
  }

 private:
  const ExchangeGraph& g_;
  std::unordered_map<std::size_t, std::optional<SymmetryWitness>> cache_;
};

LoopCertificate make_certificate(const MutationWord& w, int rank, std::vector<NodeWitness> witnesses) {
  LoopCertificate cert;
  cert.word = w;
  cert.witnesses = std::move(witnesses);
  cert.homogeneous = is_homogeneous(w);
  cert.full = is_full(w, rank);
  return cert;
}

}  // namespace

GlobalLoopResult global_loop_certificate(const ExchangeGraph& g, const MutationWord& w) {
  require_finite(g);
  GlobalLoopResult out;
  const MutationWord reduced = reduce(w, g.rank());
  check_mutable_letters(g, reduced);
  if (reduced.empty() || reduced.support().size() < 2) {
    out.trivial = true;
    return out;
  }
  std::vector<NodeWitness> witnesses;
  for (std::size_t u = 0; u < g.size(); ++u) {
    auto found = symmetry_witness(g.node(u), g.node(walk(g, u, reduced)));
    if (!found) {
      out.failing_node = u;
      return out;
    }
    witnesses.push_back({u, std::move(*found)});
  }
  out.certificate = make_certificate(reduced, g.rank(), std::move(witnesses));
  return out;
}

CertificateCheck verify_certificate(const ExchangeGraph& g, const LoopCertificate& cert) {
  require_finite(g);
  auto fail = [](std::string msg, std::optional<std::size_t> node = std::nullopt) {
    return CertificateCheck{false, node, std::move(msg)};
  };
  const int n = g.rank();
  for (Vertex v : cert.word.letters()) {
    if (v < 0 || v >= n) return fail("word letter " + std::to_string(v + 1) + " out of range");
    if (g.seed().is_frozen(v)) return fail("word letter " + std::to_string(v + 1) + " is frozen");
  }
  if (!cert.word.is_reduced()) return fail("word is not reduced");
  if (cert.word.support().size() < 2) return fail("word is trivial (fewer than two distinct letters)");
  if (cert.homogeneous != is_homogeneous(cert.word)) return fail("homogeneous flag is wrong");
  if (cert.full != is_full(cert.word, n)) return fail("full flag is wrong");
  if (cert.witnesses.size() != g.size()) {
    return fail("expected " + std::to_string(g.size()) + " witnesses, got " + std::to_string(cert.witnesses.size()));
  }
  std::vector<bool> seen(g.size(), false);
  for (const NodeWitness& nw : cert.witnesses) {
    if (nw.node >= g.size()) return fail("node " + std::to_string(nw.node) + " out of range");
    if (seen[nw.node]) return fail("node " + std::to_string(nw.node) + " listed twice", nw.node);
    seen[nw.node] = true;
    const SymmetryWitness& sw = nw.witness;
    if (sw.sigma.size() != n) return fail("sigma has wrong size", nw.node);
    if (sw.epsilon != 1 && sw.epsilon != -1) return fail("epsilon must be +1 or -1", nw.node);
    const ValuedQuiver& q = g.node(nw.node);
    if (!satisfies_witness(q, apply(q, cert.word), sw)) {
      return fail("witness equation fails at node " + std::to_string(nw.node), nw.node);
    }
  }
  return {true, std::nullopt, "ok"};
}

namespace {

class LoopSearch {
 public:
  LoopSearch(const ExchangeGraph& g, std::size_t max_len, std::vector<Vertex> alphabet)
      : g_(g), max_len_(max_len), alphabet_(std::move(alphabet)), cache_(g), counts_(static_cast<std::size_t>(g.rank()), 0) {}

  std::vector<LoopCertificate> run_from(Vertex first) {
    std::vector<std::size_t> image(g_.size());
    for (std::size_t u = 0; u < g_.size(); ++u) image[u] = u;
    extend(first, image);
    return std::move(found_);
  }

 private:
  void extend(Vertex letter, const std::vector<std::size_t>& image) {
    std::vector<std::size_t> next(image.size());
    for (std::size_t u = 0; u < image.size(); ++u) next[u] = static_cast<std::size_t>(g_.successor(image[u], letter));
    word_.push_back(letter);
    if (counts_[static_cast<std::size_t>(letter)]++ == 0) ++distinct_;
    if (distinct_ >= 2) check(next);
    if (word_.length() < max_len_) {
      for (Vertex v : alphabet_) {
        if (v != letter) extend(v, next);
      }
    }
    if (--counts_[static_cast<std::size_t>(letter)] == 0) --distinct_;
    word_.pop_back();
  }

  void check(const std::vector<std::size_t>& image) {
    for (std::size_t u = 0; u < image.size(); ++u) {
      if (!cache_.get(u, image[u])) return;
    }
    std::vector<NodeWitness> witnesses;
    witnesses.reserve(image.size());
    for (std::size_t u = 0; u < image.size(); ++u) witnesses.push_back({u, *cache_.get(u, image[u])});
    found_.push_back(make_certificate(word_, g_.rank(), std::move(witnesses)));
  }

  const ExchangeGraph& g_;
  std::size_t max_len_;
  std::vector<Vertex> alphabet_;
  WitnessCache cache_;
  MutationWord word_;
  std::vector<std::size_t> counts_;
  std::size_t distinct_ = 0;
  std::vector<LoopCertificate> found_;
};

// Number of reduced words of length 1..max_len on m letters, saturating.
std::size_t reduced_word_count(std::size_t m, std::size_t max_len, std::size_t cap) {
  std::size_t total = 0;
  std::size_t level = m;
  for (std::size_t len = 1; len <= max_len && level > 0; ++len) {
    total += level;
    if (total > cap) return cap + 1;
    if (m > 1 && level > cap / (m - 1)) return cap + 1;
    level *= (m - 1);
  }
  return total;
}

}  // namespace

std::vector<LoopCertificate> search_global_loops(const ExchangeGraph& g, std::size_t max_len,
                                                 const SearchOptions& opts) {
  require_finite(g);
  const std::vector<Vertex> alphabet = g.seed().mutable_vertices();
  if (reduced_word_count(alphabet.size(), max_len, opts.max_words) > opts.max_words) {
    throw Error(ErrorCode::BudgetExceeded,
                "more than " + std::to_string(opts.max_words) + " reduced words up to length " + std::to_string(max_len));
  }
  if (max_len == 0 || alphabet.empty()) return {};

  // One block per first letter; blocks are independent.
  std::vector<std::vector<LoopCertificate>> blocks(alphabet.size());
  std::vector<std::exception_ptr> errors(alphabet.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < alphabet.size(); b = next++) {
      try {
        blocks[b] = LoopSearch(g, max_len, alphabet).run_from(alphabet[b]);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(opts.threads, 1, alphabet.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<LoopCertificate> out;
  for (auto& block : blocks) std::move(block.begin(), block.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(),
            [](const LoopCertificate& a, const LoopCertificate& b) { return shortlex_less(a.word, b.word); });
  return out;
}

std::vector<LoopCertificate> search_global_loops(const ValuedQuiver& q, std::size_t max_len,
                                                 const ClassLimits& limits, const SearchOptions& opts) {
  return search_global_loops(enumerate_class(q, limits, opts.threads), max_len, opts);
}

Realization realize_permutation(const ValuedQuiver& q, const Permutation& sigma, std::size_t max_len,
                                const ClassLimits& limits) {
  if (sigma.size() != q.rank()) throw Error(ErrorCode::SizeMismatch, "permutation size differs from rank");
  const ExchangeGraph g = enumerate_class(q, limits);
  require_finite(g);
  Realization out;
  out.simply_laced_class = std::all_of(g.nodes().begin(), g.nodes().end(),
                                       [](const ValuedQuiver& x) { return weight(x) <= 1; });
  // BFS numbering makes path_to a shortest word.
  if (auto idx = g.index_of(permute(q, sigma))) {
    MutationWord w = g.path_to(*idx);
    if (w.length() <= max_len) out.word = std::move(w);
  }
  return out;
}

}  // namespace mutalab
