#pragma once

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dqa/rdf/graph.hpp"
#include "dqa/rdf/xsd.hpp"
#include "dqa/shacl/ast.hpp"

namespace dqa::shacl {

using rdf::Graph;
using rdf::TermId;

struct ValidationResult {
  Term focus;
  std::optional<Path> result_path;
  std::optional<Term> value;
  std::string source_shape_id;
  Component component;
  std::string message;
};

struct ShapeError {
  std::string shape_id;
  std::string message;
};

struct ValidationReport {
  bool conforms = true;
  std::vector<ValidationResult> results;
  std::map<std::string, size_t> per_shape_counts;  // id -> result count
  std::vector<ShapeError> errors;                  // malformed shapes, skipped
};

// SHACL-core subset interpreter. The graph is immutable during validation;
// per-graph caches (subclass closure, compiled regexes) are built lazily.
class Engine {
 public:
  explicit Engine(const Graph& g) : g_(g) {
    rdf_type_ = g_.find(Term::iri(vocab::rdf::type));
    sub_class_of_ = g_.find(Term::iri(vocab::rdfs::subClassOf));
    virtual_base_ = 0x40000000u;  // ids above this index extra_terms_
  }

  ValidationReport validate(const std::vector<RootShape>& shapes) {
    ValidationReport report;
    for (const auto& root : shapes) {
      std::string err;
      if (!well_formed(root.shape, err)) {
        report.errors.push_back({root.id, err});
        continue;
      }
      size_t before = report.results.size();
      for (TermId focus : resolve_target_ids(root.targets)) {
        evaluate_shape(focus, root.shape, root.id, &report.results);
      }
      report.per_shape_counts[root.id] = report.results.size() - before;
    }
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const ValidationResult& a, const ValidationResult& b) {
                       auto key = [](const ValidationResult& r) {
                         return std::make_tuple(
                             r.source_shape_id, rdf::to_ntriples(r.focus),
                             r.result_path ? r.result_path->str() : "",
                             r.value ? rdf::to_ntriples(*r.value) : "",
                             std::string(component_name(r.component)));
                       };
                       return key(a) < key(b);
                     });
    report.conforms = report.results.empty();
    return report;
  }

  // Target resolution, deterministic (N-Triples order of the rendering).
  std::vector<Term> resolve_targets(const RootShape& root) {
    std::vector<Term> out;
    for (TermId id : resolve_target_ids(root.targets)) out.push_back(term_of(id));
    return out;
  }

  std::vector<Term> evaluate_path(const Term& focus, const Path& p) {
    std::vector<Term> out;
    auto fid = g_.find(focus);
    if (!fid) return out;
    for (TermId v : path_values(*fid, p)) out.push_back(g_.term(v));
    return out;
  }

 private:
  // ---- target resolution -------------------------------------------------

  std::vector<TermId> resolve_target_ids(const std::vector<Target>& targets) {
    // Many shapes share a target (e.g. every entity-level shape targets
    // the subjects of rdf:type); resolution is cached per target.
    if (targets.size() == 1) {
      auto key = std::make_pair(static_cast<int>(targets[0].kind),
                                rdf::to_ntriples(targets[0].term));
      auto it = target_cache_.find(key);
      if (it != target_cache_.end()) return it->second;
      auto resolved = resolve_target_ids_uncached(targets);
      target_cache_.emplace(std::move(key), resolved);
      return resolved;
    }
    return resolve_target_ids_uncached(targets);
  }

  std::vector<TermId> resolve_target_ids_uncached(
      const std::vector<Target>& targets) {
    std::vector<TermId> out;
    for (const auto& t : targets) {
      switch (t.kind) {
        case TargetKind::Node: {
          // Declared target nodes validate whether present in the graph or
          // not. Absent nodes get ids above virtual_base_; every path from
          // them evaluates to the empty set.
          auto id = g_.find(t.term);
          out.push_back(id ? *id : virtual_id(t.term));
          break;
        }
        case TargetKind::SubjectsOf: {
          auto p = g_.find(t.term);
          if (p)
            for (TermId s : g_.subjects_of(*p)) out.push_back(s);
          break;
        }
        case TargetKind::ObjectsOf: {
          auto p = g_.find(t.term);
          if (p)
            for (TermId o : g_.objects_of(*p)) out.push_back(o);
          break;
        }
        case TargetKind::Class: {
          for (TermId inst : instances_of(t.term)) out.push_back(inst);
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // Deterministic focus order: sort once with cached rendering keys.
    std::vector<std::pair<std::string, TermId>> keyed;
    keyed.reserve(out.size());
    for (TermId id : out) keyed.emplace_back(rdf::to_ntriples(term_of(id)), id);
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i < keyed.size(); ++i) out[i] = keyed[i].second;
    return out;
  }

  TermId virtual_id(const Term& t) {
    for (size_t i = 0; i < extra_terms_.size(); ++i)
      if (extra_terms_[i] == t)
        return static_cast<TermId>(virtual_base_ + i);
    extra_terms_.push_back(t);
    return static_cast<TermId>(virtual_base_ + extra_terms_.size() - 1);
  }

  bool is_virtual(TermId id) const { return id >= virtual_base_; }

  const Term& term_of(TermId id) const {
    return is_virtual(id) ? extra_terms_[id - virtual_base_] : g_.term(id);
  }

  // All SHACL instances of cls: rdf:type plus rdfs:subClassOf* traversal.
  std::vector<TermId> instances_of(const Term& cls) {
    std::vector<TermId> out;
    auto cid = g_.find(cls);
    if (!cid || !rdf_type_) return out;
    for (TermId t : classes_with_ancestor(*cid)) {
      g_.for_each(std::nullopt, *rdf_type_, t, [&](const rdf::TripleIds& tr) {
        out.push_back(tr.s);
        return true;
      });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  const std::vector<TermId>& ancestors_of(TermId cls) {
    auto it = ancestors_.find(cls);
    if (it != ancestors_.end()) return it->second;
    std::vector<TermId> closure{cls};
    if (sub_class_of_) {
      std::vector<TermId> frontier{cls};
      std::unordered_set<TermId> seen{cls};
      while (!frontier.empty()) {
        TermId cur = frontier.back();
        frontier.pop_back();
        g_.for_each(cur, *sub_class_of_, std::nullopt,
                    [&](const rdf::TripleIds& tr) {
                      if (seen.insert(tr.o).second) {
                        closure.push_back(tr.o);
                        frontier.push_back(tr.o);
                      }
                      return true;
                    });
      }
    }
    std::sort(closure.begin(), closure.end());
    return ancestors_.emplace(cls, std::move(closure)).first->second;
  }

  std::vector<TermId> classes_with_ancestor(TermId cls) {
    // Candidate classes: objects of rdf:type plus subClassOf subjects.
    std::vector<TermId> candidates;
    if (rdf_type_) {
      for (TermId o : g_.objects_of(*rdf_type_)) candidates.push_back(o);
    }
    if (sub_class_of_) {
      for (TermId s : g_.subjects_of(*sub_class_of_)) candidates.push_back(s);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<TermId> out;
    for (TermId c : candidates) {
      const auto& anc = ancestors_of(c);
      if (std::binary_search(anc.begin(), anc.end(), cls)) out.push_back(c);
    }
    return out;
  }

  bool is_instance_of(TermId node, TermId cls) {
    if (!rdf_type_ || is_virtual(node)) return false;
    bool found = false;
    g_.for_each(node, *rdf_type_, std::nullopt, [&](const rdf::TripleIds& tr) {
      const auto& anc = ancestors_of(tr.o);
      if (std::binary_search(anc.begin(), anc.end(), cls)) {
        found = true;
        return false;
      }
      return true;
    });
    return found;
  }

  // ---- path evaluation ---------------------------------------------------

  std::vector<TermId> path_values(TermId focus, const Path& p) {
    std::vector<TermId> out;
    if (is_virtual(focus)) return out;
    switch (p.kind) {
      case Path::Kind::Predicate: {
        auto pid = g_.find(p.predicate);
        if (pid)
          g_.for_each(focus, *pid, std::nullopt,
                      [&](const rdf::TripleIds& tr) {
                        out.push_back(tr.o);
                        return true;
                      });
        break;
      }
      case Path::Kind::Inverse: {
        if (p.children[0].kind == Path::Kind::Predicate) {
          auto pid = g_.find(p.children[0].predicate);
          if (pid)
            g_.for_each(std::nullopt, *pid, focus,
                        [&](const rdf::TripleIds& tr) {
                          out.push_back(tr.s);
                          return true;
                        });
        } else {
          // General inverse: evaluate forward from every node is too
          // expensive; the catalog only inverts predicates.
          break;
        }
        break;
      }
      case Path::Kind::Sequence: {
        std::vector<TermId> frontier{focus};
        for (const auto& step : p.children) {
          std::vector<TermId> next;
          for (TermId node : frontier) {
            auto vals = path_values(node, step);
            next.insert(next.end(), vals.begin(), vals.end());
          }
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          frontier = std::move(next);
          if (frontier.empty()) break;
        }
        out = std::move(frontier);
        break;
      }
      case Path::Kind::OneOrMore: {
        // BFS transitive closure of >=1 step; cycle-safe.
        std::unordered_set<TermId> seen;
        std::vector<TermId> frontier{focus};
        while (!frontier.empty()) {
          std::vector<TermId> next;
          for (TermId node : frontier) {
            for (TermId v : path_values(node, p.children[0])) {
              if (seen.insert(v).second) next.push_back(v);
            }
          }
          frontier = std::move(next);
        }
        out.assign(seen.begin(), seen.end());
        break;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // ---- shape evaluation --------------------------------------------------

  struct Sink {
    std::vector<ValidationResult>* out = nullptr;  // null: conformance probe
    bool failed = false;
  };

  void evaluate_shape(TermId focus, const Shape& shape,
                      const std::string& shape_id,
                      std::vector<ValidationResult>* out) {
    Sink sink;
    sink.out = out;
    eval(focus, shape, shape_id, sink);
  }

  bool conforms(TermId node, const Shape& shape) {
    Sink sink;
    eval(node, shape, "", sink);
    return !sink.failed;
  }

  void emit(Sink& sink, TermId focus, const std::optional<Path>& path,
            std::optional<TermId> value, const std::string& shape_id,
            Component comp, const std::string& message) {
    sink.failed = true;
    if (!sink.out) return;
    ValidationResult r;
    r.focus = term_of(focus);
    r.result_path = path;
    if (value) r.value = term_of(*value);
    r.source_shape_id = shape_id;
    r.component = comp;
    r.message = message;
    sink.out->push_back(std::move(r));
  }

  // Evaluates `shape` with `focus`. For a property shape the value nodes
  // come from the path; for a node shape the focus is the sole value node.
  void eval(TermId focus, const Shape& shape, const std::string& shape_id,
            Sink& sink) {
    // Allocation-free fast paths for the dominant single-constraint
    // predicate-path property shapes (the catalog's filter branches and
    // count checks).
    if (shape.path && shape.path->kind == Path::Kind::Predicate &&
        shape.constraints.size() == 1 && eval_fast(focus, shape, shape_id, sink))
      return;
    std::vector<TermId> values;
    std::optional<Path> path = shape.path;
    if (shape.path) {
      values = path_values(focus, *shape.path);
    } else {
      values = {focus};
    }
    for (const auto& c : shape.constraints) {
      if (!sink.out && sink.failed) return;
      eval_constraint(focus, values, path, c, shape_id, sink);
    }
  }

  bool eval_fast(TermId focus, const Shape& shape, const std::string& shape_id,
                 Sink& sink) {
    const Constraint& c = shape.constraints[0];
    if (c.component != Component::HasValue &&
        c.component != Component::MinCount &&
        c.component != Component::MaxCount)
      return false;
    auto pid = g_.find(shape.path->predicate);
    size_t count = 0;
    bool found = false;
    if (pid && !is_virtual(focus)) {
      if (c.component == Component::HasValue) {
        auto want = g_.find(c.term_param);
        if (want)
          g_.for_each(focus, *pid, *want, [&](const rdf::TripleIds&) {
            found = true;
            return false;
          });
      } else if (c.component == Component::MinCount) {
        size_t stop = static_cast<size_t>(c.int_param);
        g_.for_each(focus, *pid, std::nullopt, [&](const rdf::TripleIds&) {
          ++count;
          return count < stop;  // reaching the minimum settles it
        });
      } else {
        g_.for_each(focus, *pid, std::nullopt, [&](const rdf::TripleIds&) {
          ++count;
          return true;  // exact tally keeps the message truthful
        });
      }
    }
    switch (c.component) {
      case Component::HasValue:
        if (!found)
          emit(sink, focus, shape.path, std::nullopt, shape_id, c.component,
               "required value " + rdf::to_ntriples(c.term_param) +
                   " is missing");
        break;
      case Component::MinCount:
        if (static_cast<int64_t>(count) < c.int_param)
          emit(sink, focus, shape.path, std::nullopt, shape_id, c.component,
               "minCount " + std::to_string(c.int_param) + " not met (found " +
                   std::to_string(count) + ")");
        break;
      case Component::MaxCount:
        if (static_cast<int64_t>(count) > c.int_param)
          emit(sink, focus, shape.path, std::nullopt, shape_id, c.component,
               "maxCount " + std::to_string(c.int_param) + " exceeded (found " +
                   std::to_string(count) + ")");
        break;
      default:
        break;
    }
    return true;
  }

  void eval_constraint(TermId focus, const std::vector<TermId>& values,
                       const std::optional<Path>& path, const Constraint& c,
                       const std::string& shape_id, Sink& sink) {
    switch (c.component) {
      case Component::MinCount:
        if (static_cast<int64_t>(values.size()) < c.int_param)
          emit(sink, focus, path, std::nullopt, shape_id, c.component,
               "minCount " + std::to_string(c.int_param) + " not met (found " +
                   std::to_string(values.size()) + ")");
        break;
      case Component::MaxCount:
        if (static_cast<int64_t>(values.size()) > c.int_param)
          emit(sink, focus, path, std::nullopt, shape_id, c.component,
               "maxCount " + std::to_string(c.int_param) + " exceeded (found " +
                   std::to_string(values.size()) + ")");
        break;
      case Component::HasValue: {
        auto want = g_.find(c.term_param);
        bool present = false;
        if (want)
          present = std::binary_search(values.begin(), values.end(), *want);
        if (!present)
          emit(sink, focus, path, std::nullopt, shape_id, c.component,
               "required value " + rdf::to_ntriples(c.term_param) +
                   " is missing");
        break;
      }
      case Component::UniqueLang: {
        if (!c.unique_lang) break;
        std::map<std::string, int> langs;
        for (TermId v : values) {
          const Term& t = g_.term(v);
          if (t.is_literal() && !t.language.empty()) langs[t.language]++;
        }
        for (const auto& [lang, n] : langs) {
          if (n > 1)
            emit(sink, focus, path, std::nullopt, shape_id, c.component,
                 "language tag \"" + lang + "\" used by " + std::to_string(n) +
                     " values");
        }
        break;
      }
      case Component::Equals:
      case Component::Disjoint: {
        std::vector<TermId> other;
        auto pid = g_.find(c.other_property);
        if (pid && !is_virtual(focus))
          g_.for_each(focus, *pid, std::nullopt,
                      [&](const rdf::TripleIds& tr) {
                        other.push_back(tr.o);
                        return true;
                      });
        std::sort(other.begin(), other.end());
        other.erase(std::unique(other.begin(), other.end()), other.end());
        if (c.component == Component::Equals) {
          for (TermId v : values)
            if (!std::binary_search(other.begin(), other.end(), v))
              emit(sink, focus, path, v, shape_id, c.component,
                   "value not shared with " +
                       rdf::to_ntriples(c.other_property));
          for (TermId v : other)
            if (!std::binary_search(values.begin(), values.end(), v))
              emit(sink, focus, path, v, shape_id, c.component,
                   "value of " + rdf::to_ntriples(c.other_property) +
                       " missing from path values");
        } else {
          for (TermId v : values)
            if (std::binary_search(other.begin(), other.end(), v))
              emit(sink, focus, path, v, shape_id, c.component,
                   "value shared with " + rdf::to_ntriples(c.other_property));
        }
        break;
      }
      case Component::QualifiedValueShape: {
        int64_t matching = 0;
        for (TermId v : values) {
          if (conforms(v, c.shapes[0])) ++matching;
          if (matching >= c.qualified_min) break;
        }
        if (matching < c.qualified_min)
          emit(sink, focus, path, std::nullopt, shape_id, c.component,
               "qualifiedMinCount " + std::to_string(c.qualified_min) +
                   " not met (found " + std::to_string(matching) + ")");
        break;
      }
      case Component::Property:
        for (TermId v : values) {
          // Value nodes become the focus of the nested property shape.
          eval(v, c.shapes[0], shape_id, sink);
          if (!sink.out && sink.failed) return;
        }
        break;
      default:
        for (TermId v : values) {
          eval_value_constraint(focus, v, path, c, shape_id, sink);
          if (!sink.out && sink.failed) return;
        }
    }
  }

  void eval_value_constraint(TermId focus, TermId v,
                             const std::optional<Path>& path,
                             const Constraint& c, const std::string& shape_id,
                             Sink& sink) {
    const Term& t = term_of(v);
    switch (c.component) {
      case Component::Class: {
        auto cid = g_.find(c.term_param);
        if (!cid || t.is_literal() || !is_instance_of(v, *cid))
          emit(sink, focus, path, v, shape_id, c.component,
               "value is not an instance of " +
                   rdf::to_ntriples(c.term_param));
        break;
      }
      case Component::Datatype: {
        bool ok = t.is_literal() && t.datatype == c.term_param.value &&
                  !xsd::literal_is_ill_typed(t);
        if (!ok)
          emit(sink, focus, path, v, shape_id, c.component,
               "value is not a valid literal of datatype " +
                   rdf::to_ntriples(c.term_param));
        break;
      }
      case Component::NodeKind: {
        bool ok = false;
        switch (c.node_kind) {
          case NodeKindValue::IRI: ok = t.is_iri(); break;
          case NodeKindValue::BlankNode: ok = t.is_blank(); break;
          case NodeKindValue::Literal: ok = t.is_literal(); break;
          case NodeKindValue::BlankNodeOrIRI:
            ok = t.is_blank() || t.is_iri();
            break;
          case NodeKindValue::BlankNodeOrLiteral:
            ok = t.is_blank() || t.is_literal();
            break;
          case NodeKindValue::IRIOrLiteral:
            ok = t.is_iri() || t.is_literal();
            break;
        }
        if (!ok)
          emit(sink, focus, path, v, shape_id, c.component,
               std::string("value is not of node kind ") +
                   node_kind_name(c.node_kind));
        break;
      }
      case Component::In: {
        bool found = false;
        for (const auto& item : c.list_param)
          if (item == t) {
            found = true;
            break;
          }
        if (!found)
          emit(sink, focus, path, v, shape_id, c.component,
               "value is not in the allowed list");
        break;
      }
      case Component::Pattern: {
        // Patterns match the string rendering of IRIs and the lexical form
        // of literals; blank nodes always fail.
        if (t.is_blank()) {
          emit(sink, focus, path, v, shape_id, c.component,
               "blank node cannot match pattern");
          break;
        }
        const std::regex& re = compiled(c.pattern, c.flags);
        if (!std::regex_search(t.value, re))
          emit(sink, focus, path, v, shape_id, c.component,
               "value does not match pattern \"" + c.pattern + "\"");
        break;
      }
      case Component::MinInclusive:
      case Component::MaxInclusive: {
        auto cmp = xsd::compare_literals(t, c.term_param);
        bool ok = cmp.has_value() &&
                  (c.component == Component::MinInclusive ? *cmp >= 0
                                                          : *cmp <= 0);
        if (!ok)
          emit(sink, focus, path, v, shape_id, c.component,
               std::string("value is not ") +
                   (c.component == Component::MinInclusive ? ">= " : "<= ") +
                   rdf::to_ntriples(c.term_param));
        break;
      }
      case Component::MaxLength: {
        if (t.is_blank()) {
          emit(sink, focus, path, v, shape_id, c.component,
               "blank node has no string length");
          break;
        }
        size_t length = 0;  // count codepoints, not bytes
        for (unsigned char ch : t.value)
          if ((ch & 0xC0) != 0x80) ++length;
        if (static_cast<int64_t>(length) > c.int_param)
          emit(sink, focus, path, v, shape_id, c.component,
               "string length " + std::to_string(length) + " exceeds " +
                   std::to_string(c.int_param));
        break;
      }
      case Component::LanguageIn: {
        bool ok = false;
        if (t.is_literal() && !t.language.empty()) {
          for (const auto& range : c.list_param) {
            std::string r = range.value;
            std::transform(r.begin(), r.end(), r.begin(), ::tolower);
            if (t.language == r ||
                (t.language.size() > r.size() &&
                 t.language.compare(0, r.size(), r) == 0 &&
                 t.language[r.size()] == '-')) {
              ok = true;
              break;
            }
          }
        }
        if (!ok)
          emit(sink, focus, path, v, shape_id, c.component,
               "language tag is not in the allowed set");
        break;
      }
      case Component::Not:
        if (conforms(v, c.shapes[0]))
          emit(sink, focus, path, v, shape_id, c.component,
               "value conforms to the negated shape");
        break;
      case Component::And: {
        for (const auto& inner : c.shapes) {
          if (!conforms(v, inner)) {
            emit(sink, focus, path, v, shape_id, c.component,
                 "value fails a conjunct of sh:and");
            break;
          }
        }
        break;
      }
      case Component::Or: {
        bool any = false;
        for (const auto& inner : c.shapes)
          if (conforms(v, inner)) {
            any = true;
            break;
          }
        if (!any)
          emit(sink, focus, path, v, shape_id, c.component,
               "value conforms to no branch of sh:or");
        break;
      }
      case Component::Node:
        if (!conforms(v, c.shapes[0]))
          emit(sink, focus, path, v, shape_id, c.component,
               "value does not conform to node shape " +
                   (c.shapes[0].name.empty() ? std::string("(anonymous)")
                                             : c.shapes[0].name));
        break;
      default:
        break;  // set-level components handled by the caller
    }
  }

  // ---- shape well-formedness ----------------------------------------------

  bool well_formed(const Shape& s, std::string& err) {
    for (const auto& c : s.constraints) {
      switch (c.component) {
        case Component::MinCount:
        case Component::MaxCount:
        case Component::MaxLength:
          if (c.int_param < 0) {
            err = std::string(component_name(c.component)) +
                  ": negative parameter";
            return false;
          }
          break;
        case Component::Pattern:
          try {
            (void)compiled(c.pattern, c.flags);
          } catch (const std::regex_error& e) {
            err = "pattern \"" + c.pattern + "\" does not compile: " + e.what();
            return false;
          }
          break;
        case Component::QualifiedValueShape:
          if (c.qualified_min < 0) {
            err = "qualifiedValueShape without qualifiedMinCount";
            return false;
          }
          if (!well_formed(c.shapes[0], err)) return false;
          break;
        case Component::Not:
        case Component::And:
        case Component::Or:
        case Component::Node:
        case Component::Property:
          for (const auto& inner : c.shapes)
            if (!well_formed(inner, err)) return false;
          break;
        default:
          break;
      }
    }
    return true;
  }

  const std::regex& compiled(const std::string& pattern,
                             const std::string& flags) {
    auto key = pattern + "\x1f" + flags;
    auto it = regexes_.find(key);
    if (it != regexes_.end()) return it->second;
    auto syntax = std::regex::ECMAScript;
    if (flags.find('i') != std::string::npos) syntax |= std::regex::icase;
    if (flags.find('m') != std::string::npos) syntax |= std::regex::multiline;
    return regexes_.emplace(key, std::regex(pattern, syntax)).first->second;
  }

  const Graph& g_;
  std::optional<TermId> rdf_type_;
  std::optional<TermId> sub_class_of_;
  std::unordered_map<TermId, std::vector<TermId>> ancestors_;
  std::unordered_map<std::string, std::regex> regexes_;
  std::map<std::pair<int, std::string>, std::vector<TermId>> target_cache_;
  std::vector<Term> extra_terms_;
  TermId virtual_base_;
};

inline ValidationReport validate(const Graph& g,
                                 const std::vector<RootShape>& shapes) {
  Engine engine(g);
  return engine.validate(shapes);
}

}  // namespace dqa::shacl
