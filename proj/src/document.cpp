#include "groupoidkit/document.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gk {

namespace {

using LabelIndex = std::map<std::string, Arrow>;

Arrow lookup(const LabelIndex& index, const json& label, const char* field) {
  if (!label.is_string()) throw DocumentError(std::string(field) + ": labels must be strings");
  auto it = index.find(label.get<std::string>());
  if (it == index.end())
    throw DocumentError(std::string(field) + ": unknown label '" + label.get<std::string>() + "'");
  return it->second;
}

std::vector<Arrow> decode_map(const json& doc, const char* field, const LabelIndex& index,
                              std::size_t n) {
  const json& m = doc.at(field);
  if (!m.is_object()) throw DocumentError(std::string(field) + " must be an object");
  std::vector<Arrow> out(n, kNoArrow);
  for (auto it = m.begin(); it != m.end(); ++it)
    out[lookup(index, json(it.key()), field)] = lookup(index, it.value(), field);
  for (std::size_t i = 0; i < n; ++i)
    if (out[i] == kNoArrow) throw DocumentError(std::string(field) + " is not total");
  return out;
}

json encode_mpz(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class decode_mpz(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw DocumentError("scalar components must be integers or integer strings");
}

}  // namespace

json encode(const FiniteGroupoid& g) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["elements"] = g.labels();
  doc["units"] = labels_of(g, g.units());
  json src = json::object(), rng = json::object(), inv = json::object();
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& l = g.label(static_cast<Arrow>(a));
    src[l] = g.label(g.src(static_cast<Arrow>(a)));
    rng[l] = g.label(g.rng(static_cast<Arrow>(a)));
    inv[l] = g.label(g.inv(static_cast<Arrow>(a)));
  }
  doc["src"] = std::move(src);
  doc["rng"] = std::move(rng);
  doc["inv"] = std::move(inv);
  json comp = json::array();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      const Arrow c = g.comp(static_cast<Arrow>(a), static_cast<Arrow>(b));
      if (c != kNoArrow)
        comp.push_back({g.label(static_cast<Arrow>(a)), g.label(static_cast<Arrow>(b)), g.label(c)});
    }
  doc["comp"] = std::move(comp);
  return doc;
}

FiniteGroupoid decode(const json& doc) {
  try {
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    static const std::set<std::string> kFields = {"schema_version", "elements", "units", "src",
                                                  "rng",            "inv",      "comp"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (!kFields.count(it.key())) throw DocumentError("unknown field '" + it.key() + "'");
    for (const auto& f : kFields)
      if (!doc.contains(f)) throw DocumentError("missing field '" + f + "'");
    if (doc.at("schema_version") != kSchemaVersion)
      throw DocumentError("unsupported schema_version (expected " + std::string(kSchemaVersion) + ")");

    const json& elems = doc.at("elements");
    if (!elems.is_array()) throw DocumentError("elements must be an array");
    std::vector<std::string> labels;
    LabelIndex index;
    for (const auto& e : elems) {
      if (!e.is_string()) throw DocumentError("elements: labels must be strings");
      const auto label = e.get<std::string>();
      if (!index.emplace(label, static_cast<Arrow>(labels.size())).second)
        throw DocumentError("elements: duplicate label '" + label + "'");
      labels.push_back(label);
    }
    const std::size_t n = labels.size();

    if (!doc.at("units").is_array()) throw DocumentError("units must be an array");
    std::vector<Arrow> units;
    std::set<Arrow> seen_units;
    for (const auto& u : doc.at("units")) {
      const Arrow a = lookup(index, u, "units");
      if (!seen_units.insert(a).second) throw DocumentError("units: duplicate label");
      units.push_back(a);
    }

    auto src = decode_map(doc, "src", index, n);
    auto rng = decode_map(doc, "rng", index, n);
    auto inv = decode_map(doc, "inv", index, n);

    if (!doc.at("comp").is_array()) throw DocumentError("comp must be an array");
    std::vector<Arrow> comp(n * n, kNoArrow);
    for (const auto& t : doc.at("comp")) {
      if (!t.is_array() || t.size() != 3) throw DocumentError("comp entries must be [a, b, ab]");
      const Arrow a = lookup(index, t[0], "comp"), b = lookup(index, t[1], "comp"),
                  c = lookup(index, t[2], "comp");
      Arrow& slot = comp[static_cast<std::size_t>(a) * n + b];
      if (slot != kNoArrow && slot != c)
        throw DocumentError("comp: conflicting products for (" + labels[a] + ", " + labels[b] + ")");
      slot = c;
    }
    return FiniteGroupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                          std::move(comp), std::move(inv));
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
}

FiniteGroupoid parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("JSON parse error: ") + e.what());
  }
  return decode(doc);
}

FiniteGroupoid read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

ArrowSet arrows_from_labels(const FiniteGroupoid& g, const std::vector<std::string>& labels) {
  ArrowSet out;
  for (const auto& l : labels) {
    auto a = g.find(l);
    if (!a) throw DocumentError("unknown label '" + l + "'");
    out.push_back(*a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json labels_of(const FiniteGroupoid& g, const ArrowSet& s) {
  json out = json::array();
  for (Arrow a : s) out.push_back(g.label(a));
  return out;
}

json encode_scalar(const GaussianRational& z) {
  return {encode_mpz(z.re().get_num()), encode_mpz(z.re().get_den()), encode_mpz(z.im().get_num()),
          encode_mpz(z.im().get_den())};
}

GaussianRational decode_scalar(const json& j) {
  if (!j.is_array() || j.size() != 4) throw DocumentError("scalar must be [re_num, re_den, im_num, im_den]");
  const mpz_class rd = decode_mpz(j[1]), id = decode_mpz(j[3]);
  if (rd == 0 || id == 0) throw DocumentError("scalar with zero denominator");
  return {mpq_class(decode_mpz(j[0]), rd), mpq_class(decode_mpz(j[2]), id)};
}

json encode(const AlgebraElement& f) {
  json out = json::object();
  for (std::size_t a = 0; a < f.dim(); ++a)
    if (!f[static_cast<Arrow>(a)].is_zero())
      out[f.host()->label(static_cast<Arrow>(a))] = encode_scalar(f[static_cast<Arrow>(a)]);
  return out;
}

AlgebraElement decode_element(const HostPtr& host, const json& j) {
  if (!j.is_object()) throw DocumentError("algebra element must be an object");
  AlgebraElement f(host);
  Vector coeffs(host->size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto a = host->find(it.key());
    if (!a) throw DocumentError("unknown label '" + it.key() + "'");
    coeffs[*a] = decode_scalar(it.value());
  }
  return {host, std::move(coeffs)};
}

json encode(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(encode_scalar(x));
    out.push_back(std::move(r));
  }
  return out;
}

json encode(const QuotientResult& q, const FiniteGroupoid& host) {
  json cm = json::object();
  for (std::size_t a = 0; a < host.size(); ++a)
    cm[host.label(static_cast<Arrow>(a))] = q.quotient.label(q.class_map[a]);
  return {{"quotient", encode(q.quotient)}, {"class_map", std::move(cm)}};
}

json encode(const DualBundle& d, const FiniteGroupoid& host) {
  json fibers = json::array();
  for (const auto& f : d.fibers) {
    json chars = json::array();
    for (const auto& chi : f.characters)
      chars.push_back({{"unit", host.label(f.unit)}, {"factor_residues", chi.residues}});
    fibers.push_back({{"unit", host.label(f.unit)},
                      {"invariant_factors", invariant_factors(f.group)},
                      {"characters", std::move(chars)}});
  }
  return {{"fibers", std::move(fibers)}, {"total_size", d.total_size()}};
}

json encode(const CharacterFunctional& phi) {
  json values = json::object();
  for (std::size_t c = 0; c < phi.values.size(); ++c)
    if (phi.values[c])
      values[phi.host->label(static_cast<Arrow>(c))] = {phi.values[c]->numerator(), phi.values[c]->order()};
  return {{"unit", phi.host->label(phi.x)},
          {"factor_residues", phi.chi.residues},
          {"values", std::move(values)}};
}

json encode(const GelfandMatrix& m, const FiniteGroupoid& host) {
  json rows = json::array(), entries = json::array();
  for (const auto& [unit, k] : m.rows) rows.push_back({host.label(unit), k});
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e ? json{e->numerator(), e->order()} : json(nullptr));
    entries.push_back(std::move(r));
  }
  return {{"columns", host.labels()}, {"rows", std::move(rows)}, {"entries", std::move(entries)}};
}

json encode(const ValidationReport& r, const FiniteGroupoid& g) {
  json out = json::array();
  for (const auto& v : r.violations) {
    json w = json::array();
    for (Arrow a : v.witness)
      w.push_back(a >= 0 && static_cast<std::size_t>(a) < g.size() ? json(g.label(a)) : json(a));
    out.push_back({{"kind", to_string(v.kind)}, {"message", v.message}, {"witness", std::move(w)}});
  }
  return out;
}

}  // namespace gk
