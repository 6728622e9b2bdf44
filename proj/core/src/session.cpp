#include "lnd/session.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lnd/errors.hpp"
#include "lnd/parse.hpp"

namespace lnd {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Statement {
  std::string text;
  std::size_t line;  // 1-based line of the first token
};

// Statements are physical lines, except that a '{' keeps accumulating
// lines until the braces balance.
std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    Statement st{s, lineno};
    long depth = 0;
    for (char c : s) depth += (c == '{') - (c == '}');
    while (depth > 0 && std::getline(in, line)) {
      ++lineno;
      std::string more = trim(strip_comment(line));
      for (char c : more) depth += (c == '{') - (c == '}');
      st.text += " " + more;
    }
    if (depth != 0)
      throw ParseError("session", "unbalanced braces", st.line, 1);
    out.push_back(std::move(st));
  }
  return out;
}

std::string take_word(std::string& s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
         s[i] != '[' && s[i] != '{' && s[i] != '=')
    ++i;
  std::string word = s.substr(0, i);
  s = trim(s.substr(i));
  return word;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// "{ VAR -> expr ; VAR -> expr }" -> entries.
std::map<std::string, std::string> parse_block(const std::string& body,
                                               std::size_t line) {
  std::map<std::string, std::string> entries;
  std::string inner = trim(body);
  if (inner.empty() || inner.front() != '{' || inner.back() != '}')
    throw ParseError("session", "expected '{ VAR -> expr ; ... }'", line, 1);
  inner = inner.substr(1, inner.size() - 2);

  std::size_t start = 0;
  while (start <= inner.size()) {
    auto end = inner.find(';', start);
    std::string entry = trim(inner.substr(
        start, end == std::string::npos ? std::string::npos : end - start));
    start = end == std::string::npos ? inner.size() + 1 : end + 1;
    if (entry.empty()) continue;
    auto arrow = entry.find("->");
    if (arrow == std::string::npos)
      throw ParseError("session", "expected 'VAR -> expr' in block", line, 1);
    std::string var = trim(entry.substr(0, arrow));
    std::string expr = trim(entry.substr(arrow + 2));
    if (!valid_name(var))
      throw ParseError("session", "bad variable name \"" + var + "\"", line,
                       1);
    if (entries.count(var))
      throw ParseError("session", "duplicate entry for \"" + var + "\"", line,
                       1);
    entries[var] = expr;
  }
  return entries;
}

}  // namespace

const Derivation* SessionFile::find_derivation(const std::string& name) const {
  for (const auto& [n, d] : derivations)
    if (n == name) return &d;
  return nullptr;
}

const PolyAuto* SessionFile::find_auto(const std::string& name) const {
  for (const auto& [n, a] : autos)
    if (n == name) return &a;
  return nullptr;
}

const Poly* SessionFile::find_poly(const std::string& name) const {
  for (const auto& [n, p] : polys)
    if (n == name) return &p;
  return nullptr;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

SessionFile parse_session(std::string_view text) {
  SessionFile session;
  session.digest = fnv1a_hex(text);

  RingPtr free_base;                 // declared variables, declared order
  std::optional<std::string> relation_text;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::GrLex;
  bool order_seen = false;
  bool decls_started = false;
  std::set<std::string> names;

  auto ring_ready = [&]() -> const RingPtr& {
    if (!session.ring)
      throw UsageError("session", "declare `ring Q[...]` first");
    return session.ring;
  };

  auto freeze_ring = [&]() {
    if (session.ring || variables.empty()) return;
    free_base = Ring::free_ring(variables, order);
    if (relation_text) {
      Poly relation = parse_poly(*relation_text, free_base);
      session.ring = Ring::quotient_ring(free_base, relation);
    } else {
      session.ring = free_base;
    }
  };

  for (const Statement& st : split_statements(text)) {
    std::string rest = st.text;
    std::string keyword = take_word(rest);

    if (keyword == "ring") {
      if (!variables.empty())
        throw ParseError("session", "duplicate ring declaration", st.line, 1);
      if (rest.size() < 3 || rest.substr(0, 2) != "Q[" || rest.back() != ']')
        throw ParseError("session", "expected `ring Q[v1,...,vn]`", st.line,
                         1);
      std::string list = rest.substr(2, rest.size() - 3);
      std::string current;
      std::istringstream vars(list);
      while (std::getline(vars, current, ',')) {
        std::string v = trim(current);
        if (!valid_name(v))
          throw ParseError("session", "bad variable name \"" + v + "\"",
                           st.line, 1);
        variables.push_back(v);
      }
      if (variables.empty())
        throw ParseError("session", "ring needs at least one variable",
                         st.line, 1);
    } else if (keyword == "order") {
      if (variables.empty())
        throw ParseError("session", "`order` must follow `ring`", st.line, 1);
      if (relation_text || decls_started)
        throw ParseError("session",
                         "`order` must precede `relation` and declarations",
                         st.line, 1);
      if (order_seen)
        throw ParseError("session", "duplicate order declaration", st.line, 1);
      auto parsed = order_from_name(trim(rest));
      if (!parsed)
        throw ParseError("session",
                         "unknown order \"" + trim(rest) +
                             "\" (grlex, lex or grevlex)",
                         st.line, 1);
      order = *parsed;
      order_seen = true;
    } else if (keyword == "relation") {
      if (variables.empty())
        throw ParseError("session", "`relation` must follow `ring`", st.line,
                         1);
      if (relation_text)
        throw ParseError(
            "session",
            "only a single defining relation is supported (at most one "
            "`relation`)",
            st.line, 1);
      if (decls_started)
        throw ParseError("session", "`relation` must precede declarations",
                         st.line, 1);
      if (trim(rest).empty())
        throw ParseError("session", "empty relation", st.line, 1);
      relation_text = trim(rest);
    } else if (keyword == "derivation" || keyword == "auto" ||
               keyword == "poly") {
      decls_started = true;
      freeze_ring();
      const RingPtr& ring = ring_ready();

      std::string name = take_word(rest);
      if (!valid_name(name))
        throw ParseError("session", "bad name \"" + name + "\"", st.line, 1);
      if (ring->variable_index(name))
        throw ParseError("session",
                         "name \"" + name + "\" collides with a ring variable",
                         st.line, 1);
      if (!names.insert(name).second)
        throw ParseError("session", "duplicate name \"" + name + "\"",
                         st.line, 1);

      if (keyword == "poly") {
        if (rest.empty() || rest[0] != '=')
          throw ParseError("session", "expected `poly NAME = expr`", st.line,
                           1);
        Poly value = parse_poly(trim(rest.substr(1)), ring);
        session.polys.emplace_back(name, std::move(value));
      } else {
        std::map<std::string, Poly> images;
        for (const auto& [var, expr] : parse_block(rest, st.line)) {
          if (!ring->variable_index(var))
            throw ParseError("session",
                             "unknown ring variable \"" + var + "\"", st.line,
                             1);
          images.emplace(var, parse_poly(expr, ring));
        }
        if (keyword == "derivation") {
          session.derivations.emplace_back(
              name, Derivation::from_named_images(ring, images));
        } else {
          session.autos.emplace_back(
              name, PolyAuto::from_named_images(ring, images));
        }
      }
    } else {
      throw ParseError("session", "unknown keyword \"" + keyword + "\"",
                       st.line, 1);
    }
  }

  freeze_ring();
  if (!session.ring)
    throw UsageError("session", "session declares no ring");
  return session;
}

SessionFile load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("session", "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

}  // namespace lnd
