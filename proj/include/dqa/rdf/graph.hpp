#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dqa/rdf/ntriples.hpp"
#include "dqa/rdf/term.hpp"

namespace dqa::rdf {

using TermId = uint32_t;

struct TripleIds {
  TermId s, p, o;
  friend bool operator==(const TripleIds& a, const TripleIds& b) {
    return a.s == b.s && a.p == b.p && a.o == b.o;
  }
};

// An in-memory RDF graph with interned terms and three sorted indexes
// (SPO, POS, OSP), which together answer every triple pattern. The triple
// set has set semantics: re-inserting a triple is a no-op. Construction is
// single-writer; once loaded the graph is safe for concurrent reads.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other) { assign(other); }
  Graph(Graph&& other) noexcept { assign(other); }
  Graph& operator=(const Graph& other) {
    if (this != &other) assign(other);
    return *this;
  }
  Graph& operator=(Graph&& other) noexcept {
    if (this != &other) assign(other);
    return *this;
  }

  TermId intern(const Term& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
    ids_.emplace(t, id);
    return id;
  }

  std::optional<TermId> find(const Term& t) const {
    auto it = ids_.find(t);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const Term& term(TermId id) const { return terms_[id]; }

  void insert(const Term& s, const Term& p, const Term& o) {
    insert_ids({intern(s), intern(p), intern(o)});
  }

  void insert(const Triple& t) { insert(t.subject, t.predicate, t.object); }

  void insert_ids(TripleIds t) {
    spo_.push_back(t);
    dirty_.store(true, std::memory_order_release);
  }

  size_t size() const {
    ensure_indexed();
    return spo_.size();
  }

  bool contains(const Term& s, const Term& p, const Term& o) const {
    auto si = find(s), pi = find(p), oi = find(o);
    if (!si || !pi || !oi) return false;
    ensure_indexed();
    TripleIds probe{*si, *pi, *oi};
    return std::binary_search(spo_.begin(), spo_.end(), probe, spo_less);
  }

  // Streams every triple matching the bound positions through `fn`.
  // Unbound positions are nullopt. Stops early if `fn` returns false.
  template <typename Fn>
  void for_each(std::optional<TermId> s, std::optional<TermId> p,
                std::optional<TermId> o, Fn fn) const {
    ensure_indexed();
    if (s && p) {  // s p ? / s p o
      auto [lo, hi] = range(spo_, spo_less, TripleIds{*s, *p, 0},
                            TripleIds{*s, *p, UINT32_MAX});
      for (auto it = lo; it != hi; ++it)
        if ((!o || it->o == *o) && !fn(*it)) return;
    } else if (s && o) {  // s ? o
      auto [lo, hi] = range(osp_, osp_less, TripleIds{*s, 0, *o},
                            TripleIds{*s, UINT32_MAX, *o});
      for (auto it = lo; it != hi; ++it)
        if (!fn(*it)) return;
    } else if (s) {  // s ? ?
      auto [lo, hi] = range(spo_, spo_less, TripleIds{*s, 0, 0},
                            TripleIds{*s, UINT32_MAX, UINT32_MAX});
      for (auto it = lo; it != hi; ++it)
        if (!fn(*it)) return;
    } else if (p) {  // ? p ? / ? p o
      auto [lo, hi] = range(pos_, pos_less, TripleIds{0, *p, o ? *o : 0},
                            TripleIds{UINT32_MAX, *p, o ? *o : UINT32_MAX});
      for (auto it = lo; it != hi; ++it)
        if (!fn(*it)) return;
    } else if (o) {  // ? ? o
      auto [lo, hi] = range(osp_, osp_less, TripleIds{0, 0, *o},
                            TripleIds{UINT32_MAX, UINT32_MAX, *o});
      for (auto it = lo; it != hi; ++it)
        if (!fn(*it)) return;
    } else {  // full scan
      for (const auto& t : spo_)
        if (!fn(t)) return;
    }
  }

  // Pattern match at the Term level. Returns matching triples in index
  // order; pass sorted=true for the deterministic N-Triples ordering.
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o,
                            bool sorted = false) const {
    std::vector<Triple> out;
    auto si = bind(s), pi = bind(p), oi = bind(o);
    if ((s && !si) || (p && !pi) || (o && !oi)) return out;
    for_each(si, pi, oi, [&](const TripleIds& t) {
      out.push_back(Triple{terms_[t.s], terms_[t.p], terms_[t.o]});
      return true;
    });
    if (sorted) {
      std::sort(out.begin(), out.end(),
                [](const Triple& a, const Triple& b) {
                  return to_ntriples(a) < to_ntriples(b);
                });
    }
    return out;
  }

  // Distinct subjects carrying predicate p, as interned ids (sorted by id).
  std::vector<TermId> subjects_of(TermId p) const {
    std::vector<TermId> out;
    for_each(std::nullopt, p, std::nullopt, [&](const TripleIds& t) {
      out.push_back(t.s);
      return true;
    });
    dedup(out);
    return out;
  }

  std::vector<TermId> objects_of(TermId p) const {
    std::vector<TermId> out;
    for_each(std::nullopt, p, std::nullopt, [&](const TripleIds& t) {
      out.push_back(t.o);
      return true;
    });
    dedup(out);
    return out;
  }

  template <typename Fn>
  void for_each_term(Fn fn) const {
    for (TermId i = 0; i < terms_.size(); ++i) fn(i, terms_[i]);
  }

  const std::vector<TripleIds>& triples() const {
    ensure_indexed();
    return spo_;
  }

  // Adds every triple of `other`, renaming its blank nodes apart so the two
  // documents cannot accidentally share a blank node.
  void absorb(const Graph& other, const std::string& bnode_suffix) {
    other.ensure_indexed();
    for (const auto& t : other.spo_) {
      insert(rename(other.term(t.s), bnode_suffix),
             rename(other.term(t.p), bnode_suffix),
             rename(other.term(t.o), bnode_suffix));
    }
    for (const auto& [pfx, iri] : other.prefixes_)
      prefixes_.emplace(pfx, iri);
  }

  std::map<std::string, std::string>& prefixes() { return prefixes_; }
  const std::map<std::string, std::string>& prefixes() const {
    return prefixes_;
  }

  // Set equality on triples (blank node labels compared literally).
  bool same_triples(const Graph& other) const {
    if (size() != other.size()) return false;
    ensure_indexed();
    bool ok = true;
    for (const auto& t : spo_) {
      if (!other.contains(terms_[t.s], terms_[t.p], terms_[t.o])) {
        ok = false;
        break;
      }
    }
    return ok;
  }

 private:
  static bool spo_less(const TripleIds& a, const TripleIds& b) {
    return std::tie(a.s, a.p, a.o) < std::tie(b.s, b.p, b.o);
  }
  static bool pos_less(const TripleIds& a, const TripleIds& b) {
    return std::tie(a.p, a.o, a.s) < std::tie(b.p, b.o, b.s);
  }
  static bool osp_less(const TripleIds& a, const TripleIds& b) {
    return std::tie(a.o, a.s, a.p) < std::tie(b.o, b.s, b.p);
  }

  template <typename Less>
  static std::pair<std::vector<TripleIds>::const_iterator,
                   std::vector<TripleIds>::const_iterator>
  range(const std::vector<TripleIds>& v, Less less, TripleIds lo,
        TripleIds hi) {
    return {std::lower_bound(v.begin(), v.end(), lo, less),
            std::upper_bound(v.begin(), v.end(), hi, less)};
  }

  static void dedup(std::vector<TermId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::optional<TermId> bind(const std::optional<Term>& t) const {
    if (!t) return std::nullopt;
    return find(*t);
  }

  static Term rename(const Term& t, const std::string& suffix) {
    if (!t.is_blank() || suffix.empty()) return t;
    Term r = t;
    r.value += suffix;
    return r;
  }

  // Indexes build lazily on first read. Construction is single-writer;
  // once built, concurrent readers race only on the dirty flag, which the
  // mutex + atomic pair makes safe.
  void ensure_indexed() const {
    if (!dirty_.load(std::memory_order_acquire)) return;
    std::lock_guard<std::mutex> lock(index_mutex_);
    if (!dirty_.load(std::memory_order_relaxed)) return;
    std::sort(spo_.begin(), spo_.end(), spo_less);
    spo_.erase(std::unique(spo_.begin(), spo_.end()), spo_.end());
    pos_ = spo_;
    std::sort(pos_.begin(), pos_.end(), pos_less);
    osp_ = spo_;
    std::sort(osp_.begin(), osp_.end(), osp_less);
    dirty_.store(false, std::memory_order_release);
  }

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  mutable std::vector<TripleIds> spo_, pos_, osp_;
  mutable std::atomic<bool> dirty_{false};
  mutable std::mutex index_mutex_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace dqa::rdf
