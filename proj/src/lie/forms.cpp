#include "verba/lie/forms.hpp"

#include <random>

#include "verba/error.hpp"
#include "verba/numeric.hpp"

namespace verba::lie {

void FormFamily::validate() const {
  if (!is_prime(p) || p == 2) throw Error(ErrorKind::InvalidSpec, "form families need an odd prime");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i];
    if (f.size() != dim) throw Error(ErrorKind::InvalidSpec, "form " + std::to_string(i) + " has the wrong size");
    for (unsigned a = 0; a < dim; ++a) {
      if (f[a].size() != dim) throw Error(ErrorKind::InvalidSpec, "form " + std::to_string(i) + " is not square");
      if (mod(f[a][a], p) != 0)
        throw Error(ErrorKind::NotAntisymmetric, "form " + std::to_string(i) + " has a nonzero diagonal");
      for (unsigned b = 0; b < a; ++b)
        if (mod(f[a][b] + f[b][a], p) != 0)
          throw Error(ErrorKind::NotAntisymmetric, "form " + std::to_string(i) + " is not antisymmetric");
    }
  }
}

void to_json(nlohmann::json& j, const FormFamily& f) {
  j = {{"p", f.p}, {"dim", f.dim}, {"forms", f.forms}};
}

void from_json(const nlohmann::json& j, FormFamily& f) {
  f.p = j.at("p").get<unsigned>();
  f.dim = j.at("dim").get<unsigned>();
  f.forms.clear();
  for (const auto& m : j.at("forms")) {
    if (!m.empty() && m[0].is_number()) {
      // Flat row-major list.
      if (m.size() != std::size_t{f.dim} * f.dim) throw Error(ErrorKind::InvalidSpec, "flat form has the wrong length");
      fp::Matrix mat = fp::zeros(f.dim, f.dim);
      for (unsigned a = 0; a < f.dim; ++a)
        for (unsigned b = 0; b < f.dim; ++b) mat[a][b] = m[a * f.dim + b].get<std::int64_t>();
      f.forms.push_back(std::move(mat));
    } else {
      f.forms.push_back(m.get<fp::Matrix>());
    }
  }
  for (auto& m : f.forms) m = fp::reduce(std::move(m), f.p);
  f.validate();
}

LieRing lie_from_forms(const FormFamily& ff) {
  ff.validate();
  const std::size_t n = ff.dim + ff.k();
  std::vector<LieRing::Bracket> br;
  for (unsigned a = 0; a < ff.dim; ++a)
    for (unsigned b = a + 1; b < ff.dim; ++b) {
      Vec c(n, 0);
      bool any = false;
      for (std::size_t i = 0; i < ff.k(); ++i) {
        c[ff.dim + i] = mod(ff.forms[i][a][b], ff.p);
        any = any || c[ff.dim + i] != 0;
      }
      if (any) br.push_back({a, b, std::move(c)});
    }
  return LieRing::make(ff.p, std::vector<unsigned>(n, 1), br);
}

namespace {

std::int64_t form_value(const fp::Matrix& f, const Vec& v, const Vec& w, std::int64_t p) {
  std::int64_t s = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (!v[a]) continue;
    for (std::size_t b = 0; b < w.size(); ++b) s = (s + v[a] * f[a][b] % p * w[b]) % p;
  }
  return mod(s, p);
}

void check_subspace(const FormFamily& ff, const fp::Matrix& w) {
  for (const auto& row : w)
    if (row.size() != ff.dim) throw Error(ErrorKind::BadSubspace, "subspace vector has the wrong length");
  if (fp::rank(w, ff.p) != w.size()) throw Error(ErrorKind::BadSubspace, "subspace rows are dependent");
}

}  // namespace

std::size_t wedge_rank(const FormFamily& ff, const fp::Matrix& w) {
  check_subspace(ff, w);
  fp::Matrix coeff;
  for (const auto& f : ff.forms) {
    Vec row;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b) row.push_back(form_value(f, w[a], w[b], ff.p));
    coeff.push_back(std::move(row));
  }
  if (coeff.empty() || coeff[0].empty()) return 0;
  return fp::rank(coeff, ff.p);
}

std::size_t wedge_rank(const FormFamily& ff) { return wedge_rank(ff, fp::identity(ff.dim)); }

std::size_t value_span_dim(const FormFamily& ff, const fp::Matrix& w) {
  check_subspace(ff, w);
  fp::SpanBuilder span(ff.k(), ff.p);
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b) {
      if (a == b || span.dim() == ff.k()) continue;
      Vec value(ff.k());
      for (std::size_t i = 0; i < ff.k(); ++i) value[i] = form_value(ff.forms[i], w[a], w[b], ff.p);
      span.insert(std::move(value));
    }
  return span.dim();
}

std::uint64_t gaussian_binomial(unsigned n, unsigned j, std::uint64_t p) {
  if (j > n) return 0;
  // prod_{i<j} (p^{n-i} - 1) / (p^{i+1} - 1), exact at every step.
  unsigned __int128 num = 1, den = 1;
  for (unsigned i = 0; i < j; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

void for_each_subspace(unsigned n, unsigned j, std::int64_t p, const std::function<bool(const fp::Matrix&)>& f) {
  // Choose pivot columns, then fill the free entries to the right of each
  // pivot that are not themselves pivot columns.
  std::vector<unsigned> piv(j);
  auto with_pivots = [&]() -> bool {
    std::vector<std::pair<unsigned, unsigned>> free;
    std::vector<char> is_piv(n, 0);
    for (unsigned c : piv) is_piv[c] = 1;
    for (unsigned r = 0; r < j; ++r)
      for (unsigned c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    fp::Matrix m = fp::zeros(j, n);
    for (unsigned r = 0; r < j; ++r) m[r][piv[r]] = 1;
    std::vector<std::int64_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) m[free[i].first][free[i].second] = digits[i];
      if (!f(m)) return false;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) return true;
    }
  };
  auto rec = [&](auto&& self, unsigned r, unsigned from) -> bool {
    if (r == j) return with_pivots();
    for (unsigned c = from; c + (j - r) <= n; ++c) {
      piv[r] = c;
      if (!self(self, r + 1, c + 1)) return false;
    }
    return true;
  };
  rec(rec, 0, 0);
}

ClassTwoDMax lie_d_maximal_class2(const FormFamily& ff, std::uint64_t budget) {
  ff.validate();
  std::uint64_t total = 0;
  for (unsigned j = 0; j < ff.dim; ++j) total += gaussian_binomial(ff.dim, j, ff.p);
  if (total > budget)
    throw Error(ErrorKind::SubspaceCountExceedsBudget,
                std::to_string(total) + " proper subspaces exceed the budget of " + std::to_string(budget));
  ClassTwoDMax res;
  const std::size_t k = ff.k();
  for (unsigned j = 0; j < ff.dim && res.holds; ++j) {
    for_each_subspace(ff.dim, j, ff.p, [&](const fp::Matrix& w) {
      ++res.subspaces_checked;
      if (j + k - wedge_rank(ff, w) >= ff.dim) {
        res.holds = false;
        res.witness = w;
        return false;
      }
      return true;
    });
  }
  return res;
}

namespace {

fp::Matrix form_from_code(unsigned dim, std::uint64_t code, std::int64_t p) {
  fp::Matrix m = fp::zeros(dim, dim);
  for (unsigned a = 0; a < dim; ++a)
    for (unsigned b = a + 1; b < dim; ++b) {
      const auto v = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(p));
      code /= static_cast<std::uint64_t>(p);
      m[a][b] = v;
      m[b][a] = mod(-v, p);
    }
  return m;
}

}  // namespace

std::vector<FormSearchHit> form_search(unsigned p, unsigned dim, unsigned k, const FormSearchOptions& opts) {
  if (!is_prime(p) || p == 2) throw Error(ErrorKind::InvalidArgument, "form search needs an odd prime");
  const unsigned pairs = dim * (dim - 1) / 2;
  const std::uint64_t forms = ipow(p, pairs);  // codes 1..forms-1 are the nonzero forms
  std::vector<FormSearchHit> hits;
  auto consider = [&](FormFamily ff) {
    if (opts.independent_only && wedge_rank(ff) != ff.k()) return;
    if (!lie_d_maximal_class2(ff, opts.subspace_budget).holds) return;
    const std::size_t derived = wedge_rank(ff);
    hits.push_back({std::move(ff), derived});
  };
  if (k == 0 || pairs == 0) {
    if (k == 0) consider(FormFamily{p, dim, {}});
    return hits;
  }
  if (opts.strategy == SearchStrategy::Random) {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
      FormFamily ff{p, dim, {}};
      for (unsigned i = 0; i < k; ++i) ff.forms.push_back(form_from_code(dim, 1 + rng() % (forms - 1), p));
      consider(std::move(ff));
    }
    return hits;
  }
  // Increasing tuples of nonzero form codes for the free forms.
  std::vector<fp::Matrix> fixed;
  if (opts.first_form) fixed.push_back(fp::reduce(*opts.first_form, p));
  const unsigned free = k - static_cast<unsigned>(fixed.size());
  if (free == 0) {
    consider(FormFamily{p, dim, fixed});
    return hits;
  }
  std::vector<std::uint64_t> idx(free);
  for (unsigned i = 0; i < free; ++i) idx[i] = i + 1;
  if (idx.back() >= forms) return hits;
  std::uint64_t tried = 0;
  while (true) {
    if (++tried > opts.budget)
      throw Error(ErrorKind::BudgetExceeded, "form search exceeded " + std::to_string(opts.budget) + " families");
    FormFamily ff{p, dim, fixed};
    for (auto c : idx) ff.forms.push_back(form_from_code(dim, c, p));
    consider(std::move(ff));
    int i = static_cast<int>(free) - 1;
    while (i >= 0 && idx[i] == forms - free + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned l = static_cast<unsigned>(i) + 1; l < free; ++l) idx[l] = idx[l - 1] + 1;
  }
  return hits;
}

FormFamily example_two_family(unsigned p) {
  FormFamily ff{p, 4, {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}},
                       {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, -1, 0}}}};
  for (auto& m : ff.forms) m = fp::reduce(std::move(m), p);
  ff.validate();
  return ff;
}

LieRing example_one_ring(unsigned p) {
  return LieRing::make(p, {1, 1, 2}, {{0, 1, {0, 0, static_cast<std::int64_t>(p)}}});
}

fp::Matrix standard_form(unsigned dim, unsigned p) {
  if (dim % 2) throw Error(ErrorKind::InvalidArgument, "a nondegenerate alternating form needs even dimension");
  fp::Matrix m = fp::zeros(dim, dim);
  for (unsigned a = 0; a < dim; a += 2) {
    m[a][a + 1] = 1;
    m[a + 1][a] = static_cast<std::int64_t>(p) - 1;
  }
  return m;
}

FormFamily heisenberg_family(unsigned p) {
  FormFamily ff{p, 2, {{{0, 1}, {-1, 0}}}};
  for (auto& m : ff.forms) m = fp::reduce(std::move(m), p);
  return ff;
}

std::vector<NamedRing> small_lie_rings(unsigned p) {
  const auto pp = static_cast<std::int64_t>(p);
  std::vector<NamedRing> out;
  out.push_back({"zero", LieRing(p)});
  out.push_back({"C" + std::to_string(p), LieRing::make(p, {1}, {})});
  out.push_back({"abelian(1,1)", LieRing::make(p, {1, 1}, {})});
  out.push_back({"abelian(2)", LieRing::make(p, {2}, {})});
  out.push_back({"abelian(1,2)", LieRing::make(p, {1, 2}, {})});
  out.push_back({"abelian(1,1,1)", LieRing::make(p, {1, 1, 1}, {})});
  out.push_back({"heisenberg", lie_from_forms(heisenberg_family(p))});
  out.push_back({"example-one", example_one_ring(p)});
  // [x,y] = z with z of order p^2 would not be well defined; here z has order p.
  out.push_back({"heisenberg(2,2,1)", LieRing::make(p, {2, 2, 1}, {{0, 1, {0, 0, 1}}})});
  out.push_back({"heisenberg(2,1,1)", LieRing::make(p, {2, 1, 1}, {{0, 1, {0, 0, 1}}})});
  out.push_back({"central-power", LieRing::make(p, {2, 1}, {{0, 1, {pp, 0}}})});
  out.push_back({"heisenberg+C", LieRing::make(p, {1, 1, 1, 1}, {{0, 1, {0, 0, 1, 0}}})});
  out.push_back({"symplectic(4)", lie_from_forms(FormFamily{p, 4, {standard_form(4, p)}})});
  if (p == 3) {
    out.push_back({"two-forms", lie_from_forms(example_two_family(p))});
    out.push_back({"free(3)", lie_from_forms(FormFamily{p, 3, {fp::Matrix{{0, 1, 0}, {2, 0, 0}, {0, 0, 0}},
                                                               fp::Matrix{{0, 0, 1}, {0, 0, 0}, {2, 0, 0}},
                                                               fp::Matrix{{0, 0, 0}, {0, 0, 1}, {0, 2, 0}}}})});
  }
  return out;
}

}  // namespace verba::lie
