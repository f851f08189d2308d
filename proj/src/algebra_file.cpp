#include "snalab/algebra_file.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace snalab {

namespace {

struct RawFile {
  std::map<std::string, std::vector<std::string>> tokens;
  std::vector<std::string> key_order;

  bool has(const std::string& k) const { return tokens.count(k) > 0; }
  const std::vector<std::string>& get(const std::string& k) const { return tokens.at(k); }
};

const char* kKnownKeys[] = {"kind", "elements", "covers", "d_set", "imp", "neg",
                            "twist_of", "filter"};

void check_token(const std::string& tok, int line) {
  for (char c : tok)
    if (c == ':' || c == '#')
      throw AlgebraError(Err::ParseError, "invalid character '" + std::string(1, c) +
                                              "' in token '" + tok + "' on line " +
                                              std::to_string(line));
}

RawFile tokenize(const std::string& text) {
  RawFile raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t colon = line.find(':');
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    if (colon == std::string::npos)
      throw AlgebraError(Err::ParseError, "expected 'key: values' on line " + std::to_string(lineno));
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    bool known = false;
    for (const char* k : kKnownKeys)
      if (key == k) known = true;
    if (!known)
      throw AlgebraError(Err::ParseError,
                         "unknown key '" + key + "' on line " + std::to_string(lineno));
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    if (!raw.has(key)) raw.key_order.push_back(key);
    auto& bucket = raw.tokens[key];
    while (rest >> tok) {
      check_token(tok, lineno);
      bucket.push_back(tok);
    }
  }
  return raw;
}

FiniteLattice lattice_from_raw(const RawFile& raw) {
  if (!raw.has("elements"))
    throw AlgebraError(Err::ValidationError, "missing 'elements'");
  std::vector<std::string> names = raw.get("elements");
  std::map<std::string, Elem> index;
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].find('<') != std::string::npos)
      throw AlgebraError(Err::ValidationError, "element name '" + names[i] + "' contains '<'");
    if (index.count(names[i]))
      throw AlgebraError(Err::ValidationError, "duplicate element '" + names[i] + "'");
    index[names[i]] = static_cast<Elem>(i);
  }
  std::vector<std::pair<Elem, Elem>> covers;
  if (raw.has("covers")) {
    for (const std::string& c : raw.get("covers")) {
      size_t lt = c.find('<');
      if (lt == std::string::npos || lt == 0 || lt + 1 == c.size())
        throw AlgebraError(Err::ValidationError, "cover '" + c + "' is not of the form low<high");
      std::string lo = c.substr(0, lt), hi = c.substr(lt + 1);
      if (!index.count(lo) || !index.count(hi))
        throw AlgebraError(Err::ValidationError, "cover '" + c + "' references an undeclared element");
      covers.emplace_back(index.at(lo), index.at(hi));
    }
  }
  return FiniteLattice::from_covers(std::move(names), covers);
}

ParsedAlgebra parse_raw(const RawFile& raw, const std::string& dir, int depth);

ParsedAlgebra parse_path(const std::string& path, int depth) {
  if (depth > 8) throw AlgebraError(Err::ParseError, "twist_of chain too deep at " + path);
  std::ifstream in(path);
  if (!in) throw AlgebraError(Err::ParseError, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_raw(tokenize(buf.str()), dir, depth);
}

ParsedAlgebra parse_raw(const RawFile& raw, const std::string& dir, int depth) {
  if (!raw.has("kind") || raw.get("kind").size() != 1)
    throw AlgebraError(Err::ValidationError, "missing or repeated 'kind'");
  const std::string kind = raw.get("kind")[0];

  auto forbid = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (raw.has(k))
        throw AlgebraError(Err::ValidationError,
                           "key '" + std::string(k) + "' not allowed for kind " + kind);
  };

  ParsedAlgebra out;
  if (kind == "lattice") {
    forbid({"d_set", "imp", "neg", "twist_of", "filter"});
    out.kind = ParsedAlgebra::Kind::Lattice;
    out.lattice = lattice_from_raw(raw);
    return out;
  }
  if (kind == "srl") {
    forbid({"imp", "neg", "twist_of", "filter"});
    out.kind = ParsedAlgebra::Kind::Srl;
    FiniteLattice L = lattice_from_raw(raw);
    if (!raw.has("d_set")) throw AlgebraError(Err::ValidationError, "missing 'd_set'");
    ElemSet d(L.size());
    for (const std::string& name : raw.get("d_set")) d.set(L.index_of(name));
    out.srl = Srl::residuate(std::move(L), d);
    return out;
  }
  if (kind == "sna") {
    out.kind = ParsedAlgebra::Kind::Sna;
    if (raw.has("twist_of")) {
      forbid({"elements", "covers", "d_set", "imp", "neg"});
      if (raw.get("twist_of").size() != 1)
        throw AlgebraError(Err::ValidationError, "'twist_of' needs exactly one path");
      std::string ref = raw.get("twist_of")[0];
      std::string full = dir.empty() ? ref : (std::filesystem::path(dir) / ref).string();
      ParsedAlgebra src = parse_path(full, depth + 1);
      if (src.kind != ParsedAlgebra::Kind::Srl)
        throw AlgebraError(Err::ValidationError, "'twist_of' must reference an srl file");
      if (raw.has("filter")) {
        if (raw.get("filter").size() != 1)
          throw AlgebraError(Err::ValidationError, "'filter' names exactly one upset generator");
        Elem gen = src.srl->lattice().index_of(raw.get("filter")[0]);
        out.twist = twist_filtered(*src.srl, src.srl->lattice().upset(gen));
      } else {
        out.twist = twist_full(*src.srl);
      }
      out.sna = out.twist->algebra();
      return out;
    }
    forbid({"d_set", "twist_of", "filter"});
    FiniteLattice L = lattice_from_raw(raw);
    const int n = L.size();
    if (!raw.has("imp") || !raw.has("neg"))
      throw AlgebraError(Err::ValidationError, "sna tables need 'imp' and 'neg'");
    const auto& imp_tokens = raw.get("imp");
    const auto& neg_tokens = raw.get("neg");
    if (imp_tokens.size() != static_cast<size_t>(n) * n)
      throw AlgebraError(Err::ValidationError, "'imp' must list " + std::to_string(n * n) +
                                                   " entries, got " +
                                                   std::to_string(imp_tokens.size()));
    if (neg_tokens.size() != static_cast<size_t>(n))
      throw AlgebraError(Err::ValidationError,
                         "'neg' must list " + std::to_string(n) + " entries");
    std::vector<Elem> imp, neg;
    for (const auto& tok : imp_tokens) imp.push_back(L.index_of(tok));
    for (const auto& tok : neg_tokens) neg.push_back(L.index_of(tok));
    out.sna = SnaAlgebra::from_tables(std::move(L), std::move(imp), std::move(neg));
    return out;
  }
  throw AlgebraError(Err::ValidationError, "unknown kind '" + kind + "'");
}

void emit_lattice_body(std::ostream& os, const FiniteLattice& l) {
  os << "elements:";
  for (int i = 0; i < l.size(); ++i) os << " " << l.name(i);
  os << "\n";
  auto cs = l.covers();
  if (!cs.empty()) {
    os << "covers:";
    for (auto [lo, hi] : cs) os << " " << l.name(lo) << "<" << l.name(hi);
    os << "\n";
  }
}

}  // namespace

ParsedAlgebra parse_algebra_file(const std::string& path) { return parse_path(path, 0); }

ParsedAlgebra parse_algebra_text(const std::string& text, const std::string& dir) {
  return parse_raw(tokenize(text), dir, 0);
}

std::string serialize(const FiniteLattice& l) {
  std::ostringstream os;
  os << "kind: lattice\n";
  emit_lattice_body(os, l);
  return os.str();
}

std::string serialize(const Srl& s) {
  std::ostringstream os;
  os << "kind: srl\n";
  emit_lattice_body(os, s.lattice());
  os << "d_set:";
  for (Elem d : s.d_set().elements()) os << " " << s.name(d);
  os << "\n";
  return os.str();
}

std::string serialize(const SnaAlgebra& t) {
  std::ostringstream os;
  os << "kind: sna\n";
  emit_lattice_body(os, t.lattice());
  for (Elem x = 0; x < t.size(); ++x) {
    os << "imp:";
    for (Elem y = 0; y < t.size(); ++y) os << " " << t.name(t.imp(x, y));
    os << "\n";
  }
  os << "neg:";
  for (Elem x = 0; x < t.size(); ++x) os << " " << t.name(t.neg(x));
  os << "\n";
  return os.str();
}

}  // namespace snalab
