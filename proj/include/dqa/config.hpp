#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dqa/rdf/vocab.hpp"

namespace dqa {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Run configuration. The four property fields drive the entity filter and
// the entity-level shapes; domain-knowledge blocks provide bindings for the
// manually instantiated templates.
struct Config {
  std::string type_property = vocab::rdf::type;
  std::string label_property = vocab::rdfs::label;
  std::string comment_property = vocab::rdfs::comment;
  std::string sameas_property = vocab::owl::sameAs;
  std::optional<std::string> dataset_base_iri;
  int64_t uri_length_threshold = 80;
  std::map<std::string, bool> enabled_shapes;  // template id -> override
  // template id -> list of binding objects (one instantiation each)
  std::map<std::string, std::vector<nlohmann::json>> domain_knowledge;
};

namespace config_detail {

inline bool looks_like_iri(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  auto other = s.find_first_of("/?# ");
  return other == std::string::npos || colon < other;
}

inline std::string require_iri(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string() || !looks_like_iri(v.get<std::string>()))
    throw ConfigError("config key \"" + key + "\" must be an absolute IRI");
  return v.get<std::string>();
}

}  // namespace config_detail

inline Config parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config document must be an object");
  Config cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "type_property") {
      cfg.type_property = config_detail::require_iri(value, key);
    } else if (key == "label_property") {
      cfg.label_property = config_detail::require_iri(value, key);
    } else if (key == "comment_property") {
      cfg.comment_property = config_detail::require_iri(value, key);
    } else if (key == "sameas_property") {
      cfg.sameas_property = config_detail::require_iri(value, key);
    } else if (key == "dataset_base_iri") {
      cfg.dataset_base_iri = config_detail::require_iri(value, key);
    } else if (key == "uri_length_threshold") {
      if (!value.is_number_integer() || value.get<int64_t>() <= 0)
        throw ConfigError("uri_length_threshold must be a positive integer");
      cfg.uri_length_threshold = value.get<int64_t>();
    } else if (key == "enabled_shapes") {
      if (!value.is_object())
        throw ConfigError("enabled_shapes must map template ids to booleans");
      for (const auto& [tid, flag] : value.items()) {
        if (!flag.is_boolean())
          throw ConfigError("enabled_shapes." + tid + " must be a boolean");
        cfg.enabled_shapes[tid] = flag.get<bool>();
      }
    } else if (key == "domain_knowledge") {
      if (!value.is_object())
        throw ConfigError(
            "domain_knowledge must map template ids to binding lists");
      for (const auto& [tid, bindings] : value.items()) {
        if (bindings.is_object()) {
          cfg.domain_knowledge[tid] = {bindings};
        } else if (bindings.is_array()) {
          for (const auto& b : bindings) {
            if (!b.is_object())
              throw ConfigError("domain_knowledge." + tid +
                                " entries must be objects");
            cfg.domain_knowledge[tid].push_back(b);
          }
        } else {
          throw ConfigError("domain_knowledge." + tid +
                            " must be an object or an array of objects");
        }
      }
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  return cfg;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError("malformed config JSON in " + path + ": " + e.what());
  }
  return parse_config(doc);
}

}  // namespace dqa
