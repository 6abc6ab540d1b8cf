#include "lpa/algebra.hpp"

#include <algorithm>
#include <regex>
#include <vector>

namespace lpa {

AlgebraElement AlgebraElement::monomial(AmbientPtr ambient, const Path& x, const Scalar& k) {
  if (!is_basis_path(ambient->graph, ambient->special, x)) {
    throw Error("'" + format_path(ambient->graph, x) + "' is not a basis path");
  }
  AlgebraElement a(std::move(ambient));
  a.add_term(x, k);
  return a;
}

Scalar AlgebraElement::coefficient(const Path& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_term(const Path& x, const Scalar& k) {
  Scalar c = Scalar(mpq_class(k.value()), ambient_->field);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_ambient(ambient_, rhs.ambient_);
  for (const auto& [x, k] : rhs.terms_) add_term(x, k);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_ambient(ambient_, rhs.ambient_);
  for (const auto& [x, k] : rhs.terms_) add_term(x, -k);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_ambient(a.ambient_, b.ambient_);
  return a.terms_ == b.terms_;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }

AlgebraElement scale(const Scalar& k, const AlgebraElement& a) {
  AlgebraElement out(a.ambient());
  for (const auto& [x, c] : a.terms()) out.add_term(x, k * c);
  return out;
}

namespace {

// A monomial p q* kept as its real block and its ghost block.
struct Blocks {
  std::vector<Letter> real;
  std::vector<Letter> ghost;
};

Blocks split_blocks(const Path& x) {
  Blocks b;
  if (x.is_vertex()) return b;
  for (Letter l : x.letters) (l.is_real() ? b.real : b.ghost).push_back(l);
  return b;
}

// Rewrites P Q* to normal form by repeatedly removing a special pair e e* at
// the junction with relation (iv).
void normalize_into(const Ambient& amb, std::vector<Letter> real, std::vector<Letter> ghost, VertexId at,
                    const Scalar& k, AlgebraElement& out) {
  while (!real.empty() && !ghost.empty() && real.back().id == ghost.front().id &&
         amb.special.is_special(real.back().id)) {
    EdgeId e = real.back().id;
    VertexId w = amb.graph.edge(e).source;
    real.pop_back();
    ghost.erase(ghost.begin());
    for (EdgeId f : amb.graph.emitted(w)) {
      if (f == e) continue;
      std::vector<Letter> r2 = real;
      r2.push_back(Letter::real(f));
      std::vector<Letter> g2 = ghost;
      g2.insert(g2.begin(), Letter::ghost(f));
      normalize_into(amb, std::move(r2), std::move(g2), w, -k, out);
    }
    at = w;
  }
  if (real.empty() && ghost.empty()) {
    out.add_term(Path::vertex(at), k);
    return;
  }
  real.insert(real.end(), ghost.begin(), ghost.end());
  out.add_term(Path(std::move(real)), k);
}

}  // namespace

AlgebraElement multiply_monomials(const AmbientPtr& ambient, const Path& x, const Path& y) {
  const Graph& g = ambient->graph;
  AlgebraElement out(ambient);
  if (path_range(g, x) != path_source(g, y)) return out;
  if (x.is_vertex()) {
    out.add_term(y, 1);
    return out;
  }
  if (y.is_vertex()) {
    out.add_term(x, 1);
    return out;
  }
  Blocks bx = split_blocks(x);
  Blocks by = split_blocks(y);
  // Inner cancellation with e* f = delta_{ef} r(e).
  while (!bx.ghost.empty() && !by.real.empty()) {
    if (bx.ghost.back().id != by.real.front().id) return out;
    bx.ghost.pop_back();
    by.real.erase(by.real.begin());
  }
  std::vector<Letter> real = std::move(bx.real);
  real.insert(real.end(), by.real.begin(), by.real.end());
  std::vector<Letter> ghost = std::move(bx.ghost);
  ghost.insert(ghost.end(), by.ghost.begin(), by.ghost.end());
  normalize_into(*ambient, std::move(real), std::move(ghost), path_source(g, x), Scalar(1), out);
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_ambient(a.ambient(), b.ambient());
  AlgebraElement out(a.ambient());
  for (const auto& [x, kx] : a.terms()) {
    for (const auto& [y, ky] : b.terms()) {
      auto prod = multiply_monomials(a.ambient(), x, y);
      Scalar k = kx * ky;
      for (const auto& [z, kz] : prod.terms()) out.add_term(z, k * kz);
    }
  }
  return out;
}

AlgebraElement reduce_word(const AmbientPtr& ambient, std::span<const Letter> word) {
  if (word.empty()) throw Error("empty word");
  AlgebraElement acc = AlgebraElement::monomial(ambient, Path({word.front()}));
  for (std::size_t i = 1; i < word.size() && !acc.is_zero(); ++i) {
    acc = multiply(acc, AlgebraElement::monomial(ambient, Path({word[i]})));
  }
  return acc;
}

AlgebraElement reduce_word(const AmbientPtr& ambient, std::string_view word) {
  auto letters = parse_word(ambient->graph, word);
  return reduce_word(ambient, letters);
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

AlgebraElement parse_element(const AmbientPtr& ambient, std::string_view text, bool reduce) {
  // Split into signed terms. '+' always separates; '-' separates only when
  // surrounded by whitespace so that names and coefficients can carry it.
  std::vector<std::pair<int, std::string>> terms;
  std::string cur;
  int sign = 1;
  std::string s(text);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool binary_minus = c == '-' && i > 0 && std::isspace(static_cast<unsigned char>(s[i - 1])) &&
                        i + 1 < s.size() && std::isspace(static_cast<unsigned char>(s[i + 1]));
    if (c == '+' || binary_minus) {
      if (trim(cur).empty()) throw Error("dangling operator in '" + s + "'");
      terms.emplace_back(sign, trim(cur));
      cur.clear();
      sign = c == '+' ? 1 : -1;
    } else {
      cur += c;
    }
  }
  if (trim(cur).empty()) throw Error("empty term in '" + s + "'");
  terms.emplace_back(sign, trim(cur));

  static const std::regex coeff_re(R"(^([+-]?\d+(?:/\d+)?)\*(.+)$)");
  AlgebraElement out(ambient);
  if (terms.size() == 1 && terms.front().second == "0") return out;
  for (auto& [sg, term] : terms) {
    Scalar k(sg);
    std::string mono = term;
    std::smatch m;
    if (std::regex_match(term, m, coeff_re)) {
      k = k * Scalar::parse(m[1].str(), ambient->field);
      mono = trim(m[2].str());
    } else if (term.size() > 1 && term.front() == '-') {
      k = -k;
      mono = trim(term.substr(1));
    }
    if (reduce) {
      out += scale(k, reduce_word(ambient, mono));
    } else {
      Path x = parse_path(ambient->graph, mono);
      out += AlgebraElement::monomial(ambient, x, k);
    }
  }
  return out;
}

std::string format_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  const Graph& g = a.ambient()->graph;
  std::string out;
  bool first = true;
  for (const auto& [x, k] : a.terms()) {
    bool negative = sgn(k.value()) < 0;
    Scalar mag = negative ? -k : k;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += format_path(g, x);
    first = false;
  }
  return out;
}

}  // namespace lpa
