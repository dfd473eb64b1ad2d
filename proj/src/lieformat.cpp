#include "solv/lieformat.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace solv {

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  return os.str();
}

std::optional<Rat> AlgebraDocument::param_value(const std::string& pname) const {
  for (const auto& [k, v] : params)
    if (k == pname) return v;
  return std::nullopt;
}

LieAlgebra AlgebraDocument::to_algebra() const {
  LieAlgebra g(dim, labels);
  for (const BracketLine& bl : brackets) {
    std::map<std::size_t, Rat> rhs;
    for (const BracketTerm& t : bl.terms) {
      Rat c = t.number ? *t.number : (t.param ? *param_value(*t.param) : Rat(1));
      if (t.sign < 0) c = -c;
      rhs[t.label] += c;
    }
    for (const auto& [k, c] : rhs) g.set_constant(bl.i, bl.j, k, c);
  }
  return g;
}

namespace {

struct LineScanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eol() {
    skip_ws();
    return pos >= s.size() || s[pos] == '#';
  }
  std::size_t col() const { return pos + 1; }

  // A token is a maximal run of characters outside whitespace/delimiters.
  std::string peek_token() {
    skip_ws();
    std::size_t p = pos;
    std::string tok;
    while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p])) &&
           s[p] != ',' && s[p] != ']' && s[p] != '[' && s[p] != '=' && s[p] != '#' &&
           s[p] != '+')
      tok += s[p++];
    return tok;
  }
  std::string take_token() {
    std::string tok = peek_token();
    pos += tok.size();
    return tok;
  }
  bool take_char(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string rest() {
    skip_ws();
    std::size_t end = s.find('#', pos);
    std::string r = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    pos = s.size();
    return r;
  }
};

bool is_number_token(const std::string& t) {
  return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) ||
                        (t[0] == '-' && t.size() > 1 &&
                         std::isdigit(static_cast<unsigned char>(t[1]))));
}

// Rational fix-it for a decimal literal like "0.5" -> "1/2".
std::optional<std::string> decimal_fixit(const std::string& t) {
  auto dot = t.find('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
  for (char c : ip)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  for (char c : fp)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  if (fp.empty()) return std::nullopt;
  std::string num = ip.empty() ? fp : ip + fp;
  // strip leading zeros
  std::size_t nz = num.find_first_not_of('0');
  num = nz == std::string::npos ? "0" : num.substr(nz);
  std::string den = "1" + std::string(fp.size(), '0');
  auto r = Rat::parse(num + "/" + den);
  if (!r) return std::nullopt;
  return r->str();
}

}  // namespace

ParseResult parse(const std::string& text) {
  ParseResult out;
  AlgebraDocument doc;
  bool have_header = false;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;

  auto fail = [&](std::size_t line, std::size_t col, std::string msg) {
    out.diagnostics.push_back({line, col, std::move(msg)});
    out.doc.reset();
    return out;
  };

  auto find_label = [&](const std::string& t) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < doc.labels.size(); ++i)
      if (doc.labels[i] == t) return i;
    return std::nullopt;
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    LineScanner sc{raw};
    if (sc.eol()) continue;

    if (!have_header) {
      std::size_t c0 = sc.col();
      std::string kw = sc.take_token();
      if (kw != "algebra")
        return fail(lineno, c0, "expected 'algebra <name> dim <n>' header, got '" + kw + "'");
      doc.name = sc.take_token();
      if (doc.name.empty()) return fail(lineno, sc.col(), "expected algebra name");
      std::size_t cd = sc.col();
      if (sc.take_token() != "dim") return fail(lineno, cd, "expected 'dim'");
      std::size_t cn = sc.col();
      std::string nt = sc.take_token();
      try {
        doc.dim = std::stoul(nt);
      } catch (...) {
        return fail(lineno, cn, "expected dimension count, got '" + nt + "'");
      }
      if (doc.dim == 0) return fail(lineno, cn, "dimension must be positive");
      if (!sc.eol()) return fail(lineno, sc.col(), "trailing input after header");
      doc.labels.resize(doc.dim);
      for (std::size_t i = 0; i < doc.dim; ++i) doc.labels[i] = "e" + std::to_string(i + 1);
      have_header = true;
      continue;
    }

    sc.skip_ws();
    if (raw[sc.pos] == '[') {
      // bracket line
      std::size_t cb = sc.col();
      sc.take_char('[');
      std::size_t ci = sc.col();
      std::string li = sc.take_token();
      auto i = find_label(li);
      if (!i) return fail(lineno, ci, "undeclared basis label '" + li + "'");
      if (!sc.take_char(',')) return fail(lineno, sc.col(), "expected ',' in bracket");
      std::size_t cj = sc.col();
      std::string lj = sc.take_token();
      auto j = find_label(lj);
      if (!j) return fail(lineno, cj, "undeclared basis label '" + lj + "'");
      if (!sc.take_char(']')) return fail(lineno, sc.col(), "expected ']' in bracket");
      if (*i == *j) return fail(lineno, ci, "bracket of a label with itself");
      auto key = std::minmax(*i, *j);
      if (!seen_pairs.insert({key.first, key.second}).second)
        return fail(lineno, cb,
                    "duplicate bracket: [" + li + "," + lj + "] already stated (up to orientation)");
      if (!sc.take_char('=')) return fail(lineno, sc.col(), "expected '='");

      BracketLine bl;
      bl.i = *i;
      bl.j = *j;
      int sign = 1;
      bool first = true;
      while (true) {
        sc.skip_ws();
        if (sc.eol()) {
          if (first) return fail(lineno, sc.col(), "expected a term after '='");
          break;
        }
        if (!first) {
          if (sc.take_char('+'))
            sign = 1;
          else if (sc.take_char('-'))
            sign = -1;
          else
            return fail(lineno, sc.col(), "expected '+' or '-' between terms");
        } else if (sc.take_char('-')) {
          sign = -1;
        }
        first = false;
        BracketTerm term;
        term.sign = sign;
        std::size_t ct = sc.col();
        std::string tok = sc.take_token();
        if (tok.empty()) return fail(lineno, ct, "expected a term");
        if (tok.find('.') != std::string::npos) {
          auto hint = decimal_fixit(tok);
          return fail(lineno, ct,
                      "decimal literals are not allowed; write an exact rational" +
                          (hint ? " (did you mean '" + *hint + "'?)" : ""));
        }
        if (is_number_token(tok)) {
          auto r = Rat::parse(tok);
          if (!r) return fail(lineno, ct, "malformed rational '" + tok + "'");
          term.number = *r;
          sc.take_char('*');
          ct = sc.col();
          tok = sc.take_token();
        } else if (!find_label(tok)) {
          // identifier: parameter coefficient if bound, else diagnose
          if (doc.param_value(tok)) {
            term.param = tok;
            sc.take_char('*');
            ct = sc.col();
            tok = sc.take_token();
          } else {
            // lookahead: was this meant as a coefficient?
            std::string next = sc.peek_token();
            if (!next.empty() && find_label(next))
              return fail(lineno, ct, "unbound parameter '" + tok + "'");
            return fail(lineno, ct, "undeclared basis label '" + tok + "'");
          }
        }
        auto k = find_label(tok);
        if (!k) return fail(lineno, ct, "undeclared basis label '" + tok + "'");
        term.label = *k;
        bl.terms.push_back(term);
      }
      doc.brackets.push_back(bl);
      continue;
    }

    std::size_t ck = sc.col();
    std::string kw = sc.take_token();
    if (kw == "param") {
      std::size_t cn = sc.col();
      std::string pname = sc.take_token();
      if (pname.empty() || is_number_token(pname))
        return fail(lineno, cn, "expected parameter identifier");
      if (!sc.take_char('=')) return fail(lineno, sc.col(), "expected '=' in param line");
      std::size_t cv = sc.col();
      std::string vt = sc.take_token();
      if (vt.find('.') != std::string::npos) {
        auto hint = decimal_fixit(vt);
        return fail(lineno, cv,
                    "decimal literals are not allowed; write an exact rational" +
                        (hint ? " (did you mean '" + *hint + "'?)" : ""));
      }
      auto r = Rat::parse(vt);
      if (!r) return fail(lineno, cv, "malformed rational '" + vt + "'");
      if (doc.param_value(pname)) return fail(lineno, cn, "parameter '" + pname + "' rebound");
      doc.params.push_back({pname, *r});
      if (!sc.eol()) return fail(lineno, sc.col(), "trailing input after param line");
    } else if (kw == "basis") {
      std::vector<std::string> labels;
      while (!sc.eol()) {
        std::string t = sc.take_token();
        if (t.empty()) return fail(lineno, sc.col(), "expected basis label");
        labels.push_back(t);
      }
      if (labels.size() != doc.dim)
        return fail(lineno, ck, "basis line lists " + std::to_string(labels.size()) +
                                    " labels, expected " + std::to_string(doc.dim));
      if (!doc.brackets.empty())
        return fail(lineno, ck, "basis line must precede bracket lines");
      doc.labels = labels;
    } else if (kw == "meta") {
      std::size_t cm = sc.col();
      std::string key = sc.take_token();
      if (key.empty()) return fail(lineno, cm, "expected metadata key");
      doc.meta.push_back({key, sc.rest()});
    } else {
      return fail(lineno, ck,
                  "expected 'param', 'basis', 'meta', or a bracket line, got '" + kw + "'");
    }
  }
  if (!have_header) {
    out.diagnostics.push_back({1, 1, "empty input: missing 'algebra' header"});
    return out;
  }
  out.doc = std::move(doc);
  return out;
}

std::string print(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "algebra " << doc.name << " dim " << doc.dim << "\n";
  for (const auto& [k, v] : doc.params) os << "param " << k << " = " << v.str() << "\n";
  os << "basis";
  for (const std::string& l : doc.labels) os << " " << l;
  os << "\n";
  for (const BracketLine& bl : doc.brackets) {
    os << "[" << doc.labels[bl.i] << "," << doc.labels[bl.j] << "] =";
    for (std::size_t t = 0; t < bl.terms.size(); ++t) {
      const BracketTerm& term = bl.terms[t];
      if (t == 0)
        os << (term.sign < 0 ? " -" : " ");
      else
        os << (term.sign < 0 ? " - " : " + ");
      if (term.number) os << term.number->str() << " ";
      if (term.param) os << *term.param << " ";
      os << doc.labels[term.label];
    }
    os << "\n";
  }
  for (const auto& [k, v] : doc.meta) {
    os << "meta " << k;
    if (!v.empty()) os << " " << v;
    os << "\n";
  }
  return os.str();
}

ParseResult parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult out;
    out.diagnostics.push_back({0, 0, "cannot open file: " + path});
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace solv
