#include "smgkit/description.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "smgkit/errors.hpp"

namespace smgkit {

using json = nlohmann::ordered_json;

namespace {

Group parse_group(const json& j) {
  if (j.contains("cyclic")) return Group::cyclic(j.at("cyclic").get<int>());
  std::vector<std::string> names =
      j.at("elements").get<std::vector<std::string>>();
  const json& rows = j.at("table");
  std::vector<std::vector<int>> table;
  for (const json& row : rows) {
    std::vector<int> out_row;
    for (const json& cell : row) {
      const std::string name = cell.get<std::string>();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        throw ParseError("group table entry '" + name +
                         "' is not a listed element");
      out_row.push_back(static_cast<int>(it - names.begin()));
    }
    table.push_back(std::move(out_row));
  }
  return Group::from_table(std::move(names), std::move(table));
}

json group_to_json(const Group& g) {
  json out;
  out["elements"] = g.names();
  json table = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  return out;
}

int name_index(const std::vector<std::string>& names, const std::string& name,
               const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw ParseError(std::string(what) + " '" + name + "' is not declared");
  return static_cast<int>(it - names.begin());
}

RowMonomialElement parse_edges(const json& j, const Group& g,
                               const std::vector<std::string>& b_names) {
  RowMonomialElement e;
  int m = static_cast<int>(b_names.size());
  e.dest.assign(static_cast<size_t>(m), -1);
  e.label.assign(static_cast<size_t>(m), -1);
  for (const auto& [key, val] : j.items()) {
    int b = name_index(b_names, key, "edge source");
    if (!val.is_array() || val.size() != 2)
      throw ParseError("edge at '" + key + "' must be [label, destination]");
    int lbl = g.find_name(val[0].get<std::string>());
    if (lbl < 0)
      throw ParseError("edge label '" + val[0].get<std::string>() +
                       "' is not a group element");
    e.dest[static_cast<size_t>(b)] =
        name_index(b_names, val[1].get<std::string>(), "edge destination");
    e.label[static_cast<size_t>(b)] = lbl;
  }
  return e;
}

json edges_to_json(const RowMonomialElement& e, const Group& g,
                   const std::vector<std::string>& b_names) {
  json out = json::object();
  for (int b = 0; b < e.base_size(); ++b)
    if (e.defined_at(b))
      out[b_names[static_cast<size_t>(b)]] = json::array(
          {g.name(e.label[static_cast<size_t>(b)]),
           b_names[static_cast<size_t>(e.dest[static_cast<size_t>(b)])]});
  return out;
}

SemigroupDescription parse_description_json(const json& j);

void parse_ideal(const json& j, SemigroupDescription& d) {
  d.has_rees = true;
  d.rees.group = d.group;
  d.rees.b_names = d.b_names;
  d.rees.a_names = j.at("a_names").get<std::vector<std::string>>();
  for (const std::string& name : d.group.names())
    if (name == "0")
      throw ParseError(
          "a group element named '0' is ambiguous in a structure matrix");
  const json& rows = j.at("c_t");
  if (rows.size() != d.rees.a_names.size())
    throw ParseError("c_t must have one row per a-name");
  for (const json& row : rows) {
    if (row.size() != d.b_names.size())
      throw ParseError("c_t rows must have one entry per b-name");
    std::vector<int> out_row;
    for (const json& cell : row) {
      const std::string name = cell.get<std::string>();
      if (name == "0") {
        out_row.push_back(-1);
        continue;
      }
      int g = d.group.find_name(name);
      if (g < 0)
        throw ParseError("c_t entry '" + name + "' is not a group element");
      out_row.push_back(g);
    }
    d.rees.c_t.push_back(std::move(out_row));
  }
  d.rees.validate();

  const json& gens = j.at("generators");
  if (gens.is_string() && gens.get<std::string>() == "all") {
    d.all_ideal_generators = true;
  } else if (gens.is_array()) {
    for (const json& t : gens) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError("ideal generators must be [a, g, b] triples");
      ReesTriple triple;
      triple.a = name_index(d.rees.a_names, t[0].get<std::string>(), "a-name");
      triple.g = d.group.find_name(t[1].get<std::string>());
      if (triple.g < 0)
        throw ParseError("triple label '" + t[1].get<std::string>() +
                         "' is not a group element");
      triple.b = name_index(d.b_names, t[2].get<std::string>(), "b-name");
      d.ideal_generators.push_back(triple);
    }
  } else {
    throw ParseError("ideal generators must be \"all\" or a triple list");
  }
  d.ideal_zero_generator = j.value("zero", false);
  if (j.contains("distinguished_a"))
    d.distinguished_a = name_index(
        d.rees.a_names, j.at("distinguished_a").get<std::string>(), "a-name");
}

SemigroupDescription parse_description_json(const json& j) {
  SemigroupDescription d;
  d.name = j.value("name", "");
  d.group = parse_group(j.at("group"));
  d.b_names = j.at("b_names").get<std::vector<std::string>>();
  if (d.b_names.empty()) throw ParseError("b_names must be nonempty");

  if (j.contains("ideal")) parse_ideal(j.at("ideal"), d);

  if (j.contains("extra_generators")) {
    for (const json& g : j.at("extra_generators")) {
      std::string name = g.at("name").get<std::string>();
      d.extra_generators.emplace_back(
          std::move(name), parse_edges(g.at("edges"), d.group, d.b_names));
    }
  }
  d.monoid = j.value("monoid", false);
  if (j.contains("ev_of")) {
    d.ev_of =
        std::make_shared<SemigroupDescription>(parse_description_json(j.at("ev_of")));
    d.ev_n = j.at("ev_n").get<int>();
  }
  if (!d.has_rees && d.extra_generators.empty() && !d.monoid)
    throw ParseError("description declares no generators");
  return d;
}

json description_to_json_impl(const SemigroupDescription& d) {
  json out;
  if (!d.name.empty()) out["name"] = d.name;
  out["group"] = group_to_json(d.group);
  out["b_names"] = d.b_names;
  if (d.has_rees) {
    json ideal;
    ideal["a_names"] = d.rees.a_names;
    json rows = json::array();
    for (int a = 0; a < d.rees.num_a(); ++a) {
      json row = json::array();
      for (int b = 0; b < d.rees.num_b(); ++b) {
        int c = d.rees.c(b, a);
        row.push_back(c < 0 ? std::string("0") : d.group.name(c));
      }
      rows.push_back(std::move(row));
    }
    ideal["c_t"] = std::move(rows);
    if (d.all_ideal_generators) {
      ideal["generators"] = "all";
    } else {
      json gens = json::array();
      for (const ReesTriple& t : d.ideal_generators)
        gens.push_back(json::array(
            {d.rees.a_names[static_cast<size_t>(t.a)], d.group.name(t.g),
             d.b_names[static_cast<size_t>(t.b)]}));
      ideal["generators"] = std::move(gens);
    }
    if (d.ideal_zero_generator) ideal["zero"] = true;
    if (d.distinguished_a >= 0)
      ideal["distinguished_a"] =
          d.rees.a_names[static_cast<size_t>(d.distinguished_a)];
    out["ideal"] = std::move(ideal);
  }
  if (!d.extra_generators.empty()) {
    json gens = json::array();
    for (const auto& [name, elem] : d.extra_generators) {
      json g;
      g["name"] = name;
      g["edges"] = edges_to_json(elem, d.group, d.b_names);
      gens.push_back(std::move(g));
    }
    out["extra_generators"] = std::move(gens);
  }
  if (d.monoid) out["monoid"] = true;
  if (d.ev_of) {
    out["ev_of"] = description_to_json_impl(*d.ev_of);
    out["ev_n"] = d.ev_n;
  }
  return out;
}

std::string triple_name(const SemigroupDescription& d, ReesTriple t) {
  return "(" + d.rees.a_names[static_cast<size_t>(t.a)] + "," +
         d.group.name(t.g) + "," + d.b_names[static_cast<size_t>(t.b)] + ")";
}

}  // namespace

SemigroupDescription parse_description(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_description_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad description: ") + e.what());
  }
}

SemigroupDescription load_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_description(buf.str());
}

std::string description_to_json(const SemigroupDescription& d) {
  return description_to_json_impl(d).dump(2) + "\n";
}

std::vector<std::pair<std::string, RowMonomialElement>> description_generators(
    const SemigroupDescription& d) {
  std::vector<std::pair<std::string, RowMonomialElement>> gens;
  if (d.has_rees) {
    std::vector<ReesTriple> triples = d.ideal_generators;
    if (d.all_ideal_generators) {
      triples.clear();
      for (int a = 0; a < d.rees.num_a(); ++a)
        for (int g = 0; g < d.group.order(); ++g)
          for (int b = 0; b < d.rees.num_b(); ++b)
            triples.push_back({a, g, b});
    }
    for (ReesTriple t : triples)
      gens.emplace_back(triple_name(d, t), rees_triple_element(d.rees, t));
    if (d.ideal_zero_generator)
      gens.emplace_back("0", rm_zero(static_cast<int>(d.b_names.size())));
  }
  for (const auto& g : d.extra_generators) gens.push_back(g);
  if (d.monoid)
    gens.emplace_back(
        "id", rm_identity(d.group, static_cast<int>(d.b_names.size())));
  return gens;
}

EnumeratedSemigroup build_semigroup(const SemigroupDescription& d,
                                    std::size_t cap) {
  return EnumeratedSemigroup::enumerate(d.group,
                                        static_cast<int>(d.b_names.size()),
                                        description_generators(d), cap);
}

SemigroupDescription normalize_description(const SemigroupDescription& d,
                                           int a0) {
  if (!d.has_rees)
    throw ValidationError(
        "normalize_description: description has no structure matrix");
  SemigroupDescription out = d;
  NormalizedRees nr = normalize_rees(d.rees, a0);
  out.rees = nr.rees;
  out.distinguished_a = a0;
  for (ReesTriple& t : out.ideal_generators)
    t.g = d.group.mul(t.g,
                      d.group.inv(nr.p[static_cast<size_t>(t.b)]));
  // Row functions ride along the triple rescaling: an edge i -> h.(i s)
  // becomes i -> p_i h p_{is}^{-1} . (i s).
  for (auto& [name, e] : out.extra_generators) {
    for (int b = 0; b < e.base_size(); ++b)
      if (e.defined_at(b)) {
        int dest = e.dest[static_cast<size_t>(b)];
        int lbl = e.label[static_cast<size_t>(b)];
        e.label[static_cast<size_t>(b)] = d.group.mul(
            d.group.mul(nr.p[static_cast<size_t>(b)], lbl),
            d.group.inv(nr.p[static_cast<size_t>(dest)]));
      }
  }
  return out;
}

}  // namespace smgkit
