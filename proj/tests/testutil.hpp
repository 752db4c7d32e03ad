#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dqa/rdf/graph.hpp"
#include "dqa/rdf/ntriples.hpp"

namespace dqa::testutil {

// Blank-node-insensitive graph comparison: relabels blank nodes by an
// iterated neighborhood signature (color refinement), then compares the
// resulting triple multisets. Sound for the non-automorphic fixtures used
// in tests.
inline bool same_graph_modulo_bnodes(const rdf::Graph& a,
                                     const rdf::Graph& b) {
  auto canonical = [](const rdf::Graph& g) {
    auto all = g.match(std::nullopt, std::nullopt, std::nullopt);
    std::map<std::string, std::string> color;
    auto key = [&](const rdf::Term& t) {
      if (!t.is_blank()) return rdf::to_ntriples(t);
      auto it = color.find(t.value);
      return it == color.end() ? std::string("_:*") : it->second;
    };
    for (int round = 0; round < 4; ++round) {
      std::map<std::string, std::string> next;
      for (const auto& t : all) {
        for (const rdf::Term* node : {&t.subject, &t.object}) {
          if (!node->is_blank()) continue;
          std::string& sig = next[node->value];
          std::string edge = (node == &t.subject ? "+" : "-") +
                             key(t.predicate) + "|" +
                             key(node == &t.subject ? t.object : t.subject);
          sig += edge + ";";
        }
      }
      for (auto& [label, sig] : next) {
        std::vector<std::string> parts;
        size_t start = 0;
        while (start < sig.size()) {
          auto end = sig.find(';', start);
          parts.push_back(sig.substr(start, end - start));
          start = end + 1;
        }
        std::sort(parts.begin(), parts.end());
        std::string joined = "_:{";
        for (auto& p : parts) joined += p + ";";
        joined += "}";
        sig = joined;
      }
      color = next;
    }
    std::vector<std::string> rendered;
    for (const auto& t : all)
      rendered.push_back(key(t.subject) + " " + key(t.predicate) + " " +
                         key(t.object));
    std::sort(rendered.begin(), rendered.end());
    return rendered;
  };
  return canonical(a) == canonical(b);
}

}  // namespace dqa::testutil
