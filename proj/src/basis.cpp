#include "lpa/basis.hpp"

#include <algorithm>
#include <regex>

namespace lpa {

bool basis_pair_allowed(const SpecialEdgeChoice& special, Letter a, Letter b) {
  if (a.is_ghost() && b.is_real()) return false;
  if (a.is_real() && b.is_ghost() && a.id == b.id && special.is_special(a.id)) return false;
  return true;
}

bool is_basis_path(const Graph& g, const SpecialEdgeChoice& special, const Path& p) {
  if (!is_path(g, p)) return false;
  for (std::size_t i = 1; i < p.letters.size(); ++i) {
    if (!basis_pair_allowed(special, p.letters[i - 1], p.letters[i])) return false;
  }
  return true;
}

std::vector<Letter> basis_successors(const Graph& g, const SpecialEdgeChoice& special, Letter last) {
  std::vector<Letter> out;
  for (Letter b : g.double_emissions(g.range(last))) {
    if (last.is_vertex() || basis_pair_allowed(special, last, b)) out.push_back(b);
  }
  return out;
}

std::vector<Path> enumerate_basis_paths(const Graph& g, const SpecialEdgeChoice& special, std::size_t max_len,
                                        std::optional<VertexId> at) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!at || *at == v) layer.push_back(Path::vertex(v));
  }
  out = layer;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (Letter b : basis_successors(g, special, p.letters.back())) {
        if (p.is_vertex()) {
          next.emplace_back(std::vector<Letter>{b});
        } else {
          Path q = p;
          q.letters.push_back(b);
          next.push_back(std::move(q));
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::pair<Path, Path> split_at(const Graph& g, const Path& x, std::size_t n) {
  if (n > x.length()) throw Error("split index " + std::to_string(n) + " exceeds path length");
  if (x.is_vertex()) return {x, x};
  Path head = n == 0 ? Path::vertex(path_source(g, x))
                     : Path(std::vector<Letter>(x.letters.begin(), x.letters.begin() + n));
  Path tail = n == x.length() ? Path::vertex(path_range(g, x))
                              : Path(std::vector<Letter>(x.letters.begin() + n, x.letters.end()));
  return {head, tail};
}

Letter InfinitePath::letter(std::size_t i) const {
  if (i == 0) throw Error("infinite path letters are indexed from 1");
  if (i <= suffix.size()) return suffix[suffix.size() - i];
  std::size_t k = (i - suffix.size() - 1) % period.size();
  return period[period.size() - 1 - k];
}

bool InfinitePath::real() const {
  auto is_real = [](Letter x) { return x.is_real(); };
  return std::all_of(period.begin(), period.end(), is_real) && std::all_of(suffix.begin(), suffix.end(), is_real);
}

std::vector<Letter> primitive_root(const std::vector<Letter>& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = word[i] == word[i - d];
    if (ok) return {word.begin(), word.begin() + d};
  }
  return word;
}

InfiniteReport validate_infinite(const Graph& g, const SpecialEdgeChoice& special, const std::vector<Letter>& period,
                                 const std::vector<Letter>& suffix) {
  InfiniteReport r;
  if (period.empty()) {
    r.reason = "period is empty";
    return r;
  }
  for (const auto& word : {period, suffix}) {
    for (Letter x : word) {
      if (!x.is_edge() || x.id >= g.edge_count()) {
        r.reason = "infinite paths consist of edge letters only";
        return r;
      }
    }
  }
  const bool ghost = period.front().is_ghost();
  if (std::any_of(period.begin(), period.end(), [&](Letter x) { return x.is_ghost() != ghost; })) {
    r.reason = "period mixes real and ghost letters";
    return r;
  }
  Path cc(period);
  cc.letters.insert(cc.letters.end(), period.begin(), period.end());
  if (!is_path(g, cc)) {
    r.reason = "period is not a closed path";
    return r;
  }
  Path ccs = cc;
  ccs.letters.insert(ccs.letters.end(), suffix.begin(), suffix.end());
  if (!is_path(g, ccs)) {
    r.reason = "suffix does not continue the period";
    return r;
  }
  for (std::size_t i = 1; i < ccs.letters.size(); ++i) {
    Letter a = ccs.letters[i - 1];
    Letter b = ccs.letters[i];
    if (!basis_pair_allowed(special, a, b)) {
      r.reason = "letters " + g.letter_name(a) + " " + g.letter_name(b) + " violate the basis-path condition";
      return r;
    }
  }
  r.valid = true;
  r.ghostly = ghost;
  r.real = !ghost && std::all_of(suffix.begin(), suffix.end(), [](Letter x) { return x.is_real(); });
  return r;
}

namespace {

void absorb(InfinitePath& x) {
  x.period = primitive_root(x.period);
  std::size_t drop = 0;
  // ...c c (c_1 s') = ...(c_2..c_k c_1)(c_2..c_k c_1) s'
  while (drop < x.suffix.size() && x.suffix[drop] == x.period.front()) {
    std::rotate(x.period.begin(), x.period.begin() + 1, x.period.end());
    ++drop;
  }
  x.suffix.erase(x.suffix.begin(), x.suffix.begin() + static_cast<std::ptrdiff_t>(drop));
}

}  // namespace

InfinitePath make_infinite(const Graph& g, const SpecialEdgeChoice& special, std::vector<Letter> period,
                           std::vector<Letter> suffix) {
  auto report = validate_infinite(g, special, period, suffix);
  if (!report.valid) throw Error("invalid infinite basis path: " + report.reason);
  InfinitePath x{std::move(period), std::move(suffix)};
  absorb(x);
  return x;
}

std::pair<Path, InfinitePath> split_at(const Graph& g, const InfinitePath& x, std::size_t n) {
  Path head;
  if (n == 0) {
    head = Path::vertex(g.range(x.letter(1)));
  } else {
    for (std::size_t i = n; i >= 1; --i) head.letters.push_back(x.letter(i));
  }
  InfinitePath tail = x;
  if (n <= x.suffix.size()) {
    tail.suffix.resize(x.suffix.size() - n);
  } else {
    std::size_t k = (n - x.suffix.size()) % x.period.size();
    tail.suffix.assign(x.period.begin(), x.period.end() - static_cast<std::ptrdiff_t>(k));
    if (k == 0) tail.suffix.clear();
  }
  absorb(tail);
  return {head, tail};
}

bool tail_equivalent(const InfinitePath& x, const InfinitePath& y) {
  if (x.period.size() != y.period.size()) return false;
  return canonical_rotation(Path(x.period)) == canonical_rotation(Path(y.period));
}

bool is_closed_basis_path(const Graph& g, const SpecialEdgeChoice& special, const Path& p) {
  if (p.empty() || p.is_vertex() || !is_basis_path(g, special, p)) return false;
  if (path_source(g, p) != path_range(g, p)) return false;
  const bool ghost = p.letters.front().is_ghost();
  return std::all_of(p.letters.begin(), p.letters.end(), [&](Letter x) { return x.is_ghost() == ghost; });
}

Path canonical_rotation(const Path& p) {
  Path best = p;
  Path cur = p;
  for (std::size_t k = 1; k < p.letters.size(); ++k) {
    std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
    if (cur.letters < best.letters) best = cur;
  }
  return best;
}

bool cyclic_equivalent(const Path& x, const Path& y) {
  if (x.letters.size() != y.letters.size()) return false;
  return canonical_rotation(x) == canonical_rotation(y);
}

std::string format_infinite(const Graph& g, const InfinitePath& x) {
  std::string out = "(" + format_path(g, Path(x.period)) + ")^inf";
  if (!x.suffix.empty()) out += "." + format_path(g, Path(x.suffix));
  return out;
}

InfinitePath parse_infinite(const Graph& g, const SpecialEdgeChoice& special, std::string_view text) {
  static const std::regex re(R"(^\s*\(([^()]+)\)\^inf(?:\.(.+))?\s*$)");
  std::smatch m;
  std::string s(text);
  if (!std::regex_match(s, m, re)) {
    throw Error("bad infinite path '" + s + "' (expected (<period>)^inf or (<period>)^inf.<suffix>)");
  }
  auto period = parse_word(g, m[1].str());
  std::vector<Letter> suffix;
  if (m[2].matched) suffix = parse_word(g, m[2].str());
  return make_infinite(g, special, std::move(period), std::move(suffix));
}

}  // namespace lpa
