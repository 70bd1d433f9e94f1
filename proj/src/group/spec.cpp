#include "verba/group/spec.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "verba/error.hpp"
#include "verba/group/algorithms.hpp"
#include "verba/lie/lazard.hpp"
#include "verba/numeric.hpp"

namespace verba {

namespace {

using nlohmann::json;

constexpr Element kUnset = std::numeric_limits<Element>::max();

void check_cap(std::uint64_t order, std::size_t cap) {
  if (order > cap)
    throw Error(ErrorKind::OrderExceedsCap,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

std::string power_label(const std::string& base, std::uint64_t k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

BuiltGroup build_cyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "cyclic group of order 0");
  check_cap(n, cap);
  ElementModel m;
  m.code_space = n;
  m.generators = {n > 1 ? 1u : 0u};
  m.mul = [n](std::uint64_t a, std::uint64_t b) { return (a + b) % n; };
  m.label = [](std::uint64_t a) { return power_label("g", a); };
  return bfs_materialize(m, cap);
}

BuiltGroup build_elementary_abelian(std::uint64_t p, unsigned r, std::size_t cap) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidSpec, "elementary abelian group needs a prime");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < r; ++i) {
    order *= p;
    check_cap(order, cap);
  }
  ElementModel m;
  m.code_space = order;
  for (unsigned i = 0; i < r; ++i) m.generators.push_back(ipow(p, i));
  m.mul = [p, r](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0, radix = 1;
    for (unsigned i = 0; i < r; ++i) {
      out += ((a % p + b % p) % p) * radix;
      a /= p;
      b /= p;
      radix *= p;
    }
    return out;
  };
  m.label = [p, r](std::uint64_t a) {
    std::string s = "(";
    for (unsigned i = 0; i < r; ++i) {
      if (i) s += ",";
      s += std::to_string(a % p);
      a /= p;
    }
    return s + ")";
  };
  return bfs_materialize(m, cap);
}

BuiltGroup build_dihedral(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "dihedral group needs n >= 1");
  check_cap(2 * n, cap);
  ElementModel m;
  m.code_space = 2 * n;
  m.generators = {n > 1 ? 2u : 0u, 1u};
  // code = 2a + b for r^a s^b
  m.mul = [n](std::uint64_t x, std::uint64_t y) {
    const std::uint64_t a = x / 2, b = x % 2, c = y / 2, d = y % 2;
    const std::uint64_t e = b ? (a + n - c) % n : (a + c) % n;
    return 2 * e + ((b + d) % 2);
  };
  m.label = [](std::uint64_t x) {
    const std::uint64_t a = x / 2, b = x % 2;
    if (a == 0) return std::string(b ? "s" : "1");
    return power_label("r", a) + (b ? "s" : "");
  };
  return bfs_materialize(m, cap);
}

BuiltGroup build_q8(std::size_t cap) {
  check_cap(8, cap);
  // code = 2u + sign with u in {1, i, j, k}
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  ElementModel m;
  m.code_space = 8;
  m.generators = {2, 4};
  m.mul = [](std::uint64_t x, std::uint64_t y) {
    const auto u = x / 2, v = y / 2;
    const auto s = (x + y + static_cast<std::uint64_t>(sign[u][v])) % 2;
    return 2 * static_cast<std::uint64_t>(unit[u][v]) + s;
  };
  m.label = [](std::uint64_t x) {
    static const char* names[4] = {"1", "i", "j", "k"};
    return std::string(x % 2 ? "-" : "") + names[x / 2];
  };
  return bfs_materialize(m, cap);
}

std::uint64_t encode_perm(const std::vector<std::uint32_t>& p) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return c;
}

std::string cycle_label(std::uint64_t code, unsigned degree) {
  std::vector<unsigned> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<unsigned>((code >> (4 * i)) & 15u);
  std::vector<char> seen(degree);
  std::string out;
  for (unsigned i = 0; i < degree; ++i) {
    if (seen[i] || img[i] == i) continue;
    out += "(";
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = img[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

BuiltGroup build_permutations(unsigned degree, const std::vector<std::vector<std::uint32_t>>& gens,
                              std::size_t cap) {
  if (degree == 0 || degree > 16) throw Error(ErrorKind::InvalidSpec, "permutation degree must be in 1..16");
  ElementModel m;
  std::vector<std::uint32_t> id(degree);
  for (unsigned i = 0; i < degree; ++i) id[i] = i;
  m.identity = encode_perm(id);
  for (const auto& g : gens) {
    if (g.size() != degree) throw Error(ErrorKind::InvalidSpec, "permutation has wrong length");
    std::vector<char> seen(degree);
    for (auto x : g) {
      if (x >= degree || seen[x]) throw Error(ErrorKind::InvalidSpec, "generator is not a permutation");
      seen[x] = 1;
    }
    m.generators.push_back(encode_perm(g));
  }
  m.mul = [degree](std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < degree; ++i) {
      const auto xi = (x >> (4 * i)) & 15u;
      const auto yxi = (y >> (4 * xi)) & 15u;
      out |= yxi << (4 * i);
    }
    return out;
  };
  m.label = [degree](std::uint64_t x) { return cycle_label(x, degree); };
  return bfs_materialize(m, cap);
}

std::vector<std::vector<std::uint32_t>> symmetric_generators(unsigned n) {
  std::vector<std::uint32_t> t(n), c(n);
  for (unsigned i = 0; i < n; ++i) {
    t[i] = i;
    c[i] = (i + 1) % n;
  }
  if (n >= 2) std::swap(t[0], t[1]);
  return {t, c};
}

BuiltGroup build_direct(const BuiltGroup& a, const BuiltGroup& b, std::size_t cap) {
  const std::uint64_t na = a.table.order(), nb = b.table.order();
  check_cap(na * nb, cap);
  ElementModel m;
  m.code_space = na * nb;
  for (Element g : a.generators) m.generators.push_back(static_cast<std::uint64_t>(g) * nb);
  for (Element g : b.generators) m.generators.push_back(g);
  const GroupTable ta = a.table, tb = b.table;
  m.mul = [ta, tb, nb](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(ta.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb))) * nb +
           tb.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
  };
  m.label = [ta, tb, nb](std::uint64_t x) {
    return "(" + ta.label(static_cast<Element>(x / nb)) + "," + tb.label(static_cast<Element>(x % nb)) + ")";
  };
  return bfs_materialize(m, cap);
}

/// Extends generator images to an automorphism of N, or throws InvalidAction.
std::vector<Element> extend_automorphism(const BuiltGroup& n, const std::vector<Element>& images) {
  const GroupTable& t = n.table;
  const std::size_t order = t.order();
  std::vector<Element> psi(order, kUnset);
  psi[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (std::size_t k = 0; k < n.generators.size(); ++k) {
      const Element y = t.mul(x, n.generators[k]);
      const Element val = t.mul(psi[x], images[k]);
      if (psi[y] == kUnset) {
        psi[y] = val;
        queue.push_back(y);
      } else if (psi[y] != val) {
        throw Error(ErrorKind::InvalidAction, "generator images do not define a homomorphism of the normal part");
      }
    }
  }
  if (queue.size() != order) throw Error(ErrorKind::InvalidAction, "normal generators do not generate");
  std::vector<char> hit(order);
  for (Element v : psi) {
    if (hit[v]) throw Error(ErrorKind::InvalidAction, "generator images do not define an automorphism");
    hit[v] = 1;
  }
  return psi;
}

BuiltGroup build_semidirect(const BuiltGroup& normal, const BuiltGroup& acting,
                            const std::vector<std::vector<Element>>& images, std::size_t cap) {
  const std::uint64_t nn = normal.table.order(), na = acting.table.order();
  check_cap(nn * na, cap);
  if (images.size() != acting.generators.size())
    throw Error(ErrorKind::InvalidAction, "action lists " + std::to_string(images.size()) +
                                              " generator images, acting group has " +
                                              std::to_string(acting.generators.size()) + " generators");
  std::vector<std::vector<Element>> gen_auts;
  for (const auto& im : images) {
    if (im.size() != normal.generators.size())
      throw Error(ErrorKind::InvalidAction, "each acting generator must give one image per normal generator");
    gen_auts.push_back(extend_automorphism(normal, im));
  }

  // psi[a] is the automorphism n -> n^a; psi_{ag} = psi_g ∘ psi_a.
  const GroupTable& ta = acting.table;
  std::vector<std::vector<Element>> psi(na);
  psi[0].resize(nn);
  for (std::size_t i = 0; i < nn; ++i) psi[0][i] = static_cast<Element>(i);
  std::vector<Element> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (std::size_t k = 0; k < acting.generators.size(); ++k) {
      const Element y = ta.mul(x, acting.generators[k]);
      std::vector<Element> composed(nn);
      for (std::size_t i = 0; i < nn; ++i) composed[i] = gen_auts[k][psi[x][i]];
      if (psi[y].empty()) {
        psi[y] = std::move(composed);
        queue.push_back(y);
      } else if (psi[y] != composed) {
        throw Error(ErrorKind::InvalidAction, "action is not a homomorphism of the acting group");
      }
    }
  }
  if (queue.size() != na) throw Error(ErrorKind::InvalidAction, "acting generators do not generate");

  ElementModel m;
  m.code_space = nn * na;
  for (Element g : normal.generators) m.generators.push_back(g);
  for (Element g : acting.generators) m.generators.push_back(static_cast<std::uint64_t>(g) * nn);
  const GroupTable tn = normal.table;
  auto shared_psi = std::make_shared<const std::vector<std::vector<Element>>>(std::move(psi));
  m.mul = [ta, tn, nn, shared_psi](std::uint64_t x, std::uint64_t y) {
    const auto a = static_cast<Element>(x / nn), n = static_cast<Element>(x % nn);
    const auto a2 = static_cast<Element>(y / nn), n2 = static_cast<Element>(y % nn);
    return static_cast<std::uint64_t>(ta.mul(a, a2)) * nn + tn.mul((*shared_psi)[a2][n], n2);
  };
  m.label = [ta, tn, nn](std::uint64_t x) {
    return "(" + ta.label(static_cast<Element>(x / nn)) + "," + tn.label(static_cast<Element>(x % nn)) + ")";
  };
  return bfs_materialize(m, cap);
}

Element resolve_image(const GroupTable& t, const spec::ImageRef& ref) {
  if (const auto* i = std::get_if<std::int64_t>(&ref)) {
    if (*i < 0 || static_cast<std::uint64_t>(*i) >= t.order())
      throw Error(ErrorKind::InvalidAction, "action image index " + std::to_string(*i) + " out of range");
    return static_cast<Element>(*i);
  }
  const auto& label = std::get<std::string>(ref);
  const std::size_t idx = t.find_label(label);
  if (idx >= t.order()) throw Error(ErrorKind::InvalidAction, "unknown element label \"" + label + "\"");
  return static_cast<Element>(idx);
}

BuiltGroup build(const GroupSpec& s, std::size_t cap);

struct Builder {
  std::size_t cap;
  BuiltGroup operator()(const spec::Cyclic& c) const { return build_cyclic(c.n, cap); }
  BuiltGroup operator()(const spec::ElementaryAbelian& e) const { return build_elementary_abelian(e.p, e.r, cap); }
  BuiltGroup operator()(const spec::Dihedral& d) const { return build_dihedral(d.n, cap); }
  BuiltGroup operator()(const spec::Quaternion8&) const { return build_q8(cap); }
  BuiltGroup operator()(const spec::Symmetric& s) const {
    if (s.n == 0 || s.n > 5) throw Error(ErrorKind::InvalidSpec, "symmetric groups are supported for n <= 5");
    if (s.n == 1) return build_cyclic(1, cap);
    return build_permutations(s.n, symmetric_generators(s.n), cap);
  }
  BuiltGroup operator()(const spec::DirectProduct& d) const {
    if (!d.left || !d.right) throw Error(ErrorKind::InvalidSpec, "direct product needs two factors");
    return build_direct(build(*d.left, cap), build(*d.right, cap), cap);
  }
  BuiltGroup operator()(const spec::Semidirect& sd) const {
    if (!sd.normal || !sd.acting) throw Error(ErrorKind::InvalidSpec, "semidirect product needs two factors");
    const BuiltGroup n = build(*sd.normal, cap);
    const BuiltGroup a = build(*sd.acting, cap);
    std::vector<std::vector<Element>> images;
    for (const auto& row : sd.action) {
      std::vector<Element> r;
      for (const auto& ref : row) r.push_back(resolve_image(n.table, ref));
      images.push_back(std::move(r));
    }
    return build_semidirect(n, a, images, cap);
  }
  BuiltGroup operator()(const spec::ScalarExtension& se) const {
    if (!is_prime(se.p) || !is_prime(se.q))
      throw Error(ErrorKind::InvalidSpec, "scalar extension needs primes p and q");
    const BuiltGroup n = build_elementary_abelian(se.q, se.s, cap);
    const BuiltGroup a = build_cyclic(se.p, cap);
    std::vector<Element> im;
    const auto lambda = mod(se.lambda, static_cast<std::int64_t>(se.q));
    for (Element g : n.generators) im.push_back(algo::power(n.table, g, lambda));
    return build_semidirect(n, a, {im}, cap);
  }
  BuiltGroup operator()(const spec::CayleyTable& c) const {
    check_cap(c.order, cap);
    GroupTable t = GroupTable::from_cayley(c.order, c.table);
    auto gens = algo::greedy_generators(t, whole_members(t));
    return {t, gens};
  }
  BuiltGroup operator()(const spec::Permutations& p) const { return build_permutations(p.degree, p.generators, cap); }
  BuiltGroup operator()(const spec::LazardExp& l) const {
    check_cap(l.lie.order(), cap);
    lie::LazardGroup g = lie::lazard_exp(l.lie, cap);
    std::vector<Element> gens;
    for (std::size_t i = 0; i < l.lie.rank(); ++i) gens.push_back(g.index_of[l.lie.encode(l.lie.basis(i))]);
    return {g.group, gens};
  }

  static Bitset whole_members(const GroupTable& t) {
    Bitset b(t.order());
    for (std::size_t i = 0; i < t.order(); ++i) b.set(i);
    return b;
  }
};

BuiltGroup build(const GroupSpec& s, std::size_t cap) { return std::visit(Builder{cap}, s.v); }

std::string wrap(const GroupSpec& s) {
  const std::string n = s.name();
  const bool composite = std::holds_alternative<spec::DirectProduct>(s.v) || std::holds_alternative<spec::Semidirect>(s.v);
  return composite ? "(" + n + ")" : n;
}

}  // namespace

BuiltGroup bfs_materialize(const ElementModel& model, std::size_t cap, std::vector<std::uint64_t>* codes_out) {
  const bool dense = model.code_space > 0 && model.code_space <= (std::uint64_t{1} << 27);
  std::vector<Element> dense_index;
  std::unordered_map<std::uint64_t, Element> sparse_index;
  if (dense) dense_index.assign(model.code_space, kUnset);

  auto lookup = [&](std::uint64_t code) -> Element {
    if (dense) return dense_index[code];
    auto it = sparse_index.find(code);
    return it == sparse_index.end() ? kUnset : it->second;
  };
  auto assign = [&](std::uint64_t code, Element idx) {
    if (dense)
      dense_index[code] = idx;
    else
      sparse_index.emplace(code, idx);
  };

  const std::size_t ng = model.generators.size();
  std::vector<std::uint64_t> codes{model.identity};
  assign(model.identity, 0);
  std::vector<Element> rmul, parent{0};
  std::vector<std::uint32_t> via{0};
  for (std::size_t qi = 0; qi < codes.size(); ++qi) {
    const std::uint64_t x = codes[qi];
    for (std::size_t k = 0; k < ng; ++k) {
      const std::uint64_t y = model.mul(x, model.generators[k]);
      Element idx = lookup(y);
      if (idx == kUnset) {
        idx = static_cast<Element>(codes.size());
        if (codes.size() + 1 > cap)
          throw Error(ErrorKind::OrderExceedsCap, "group order exceeds cap " + std::to_string(cap));
        codes.push_back(y);
        assign(y, idx);
        parent.push_back(static_cast<Element>(qi));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      rmul.push_back(idx);
    }
  }

  const std::size_t n = codes.size();
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Element* row = mul.data() + i * n;
    row[0] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) row[j] = rmul[static_cast<std::size_t>(row[parent[j]]) * ng + via[j]];
  }
  std::vector<std::string> labels;
  if (model.label) {
    labels.reserve(n);
    for (auto c : codes) labels.push_back(model.label(c));
  }
  BuiltGroup out{GroupTable::trusted(n, std::move(mul), std::move(labels)), {}};
  for (auto g : model.generators) out.generators.push_back(lookup(g));
  if (codes_out) *codes_out = std::move(codes);
  return out;
}

GroupTable materialize(const GroupSpec& spec, std::size_t cap) { return build(spec, cap).table; }

BuiltGroup materialize_with_generators(const GroupSpec& spec, std::size_t cap) { return build(spec, cap); }

std::string GroupSpec::kind() const {
  static const char* names[] = {"cyclic",      "elementary_abelian", "dihedral",         "quaternion8",
                                "symmetric",   "direct_product",     "semidirect",       "scalar_extension",
                                "cayley_table", "permutations",      "lazard_exp"};
  return names[v.index()];
}

std::string GroupSpec::name() const {
  struct Namer {
    std::string operator()(const spec::Cyclic& c) const { return "C" + std::to_string(c.n); }
    std::string operator()(const spec::ElementaryAbelian& e) const {
      return "C" + std::to_string(e.p) + "^" + std::to_string(e.r);
    }
    std::string operator()(const spec::Dihedral& d) const { return "D" + std::to_string(d.n); }
    std::string operator()(const spec::Quaternion8&) const { return "Q8"; }
    std::string operator()(const spec::Symmetric& s) const { return "S" + std::to_string(s.n); }
    std::string operator()(const spec::DirectProduct& d) const { return wrap(*d.left) + " x " + wrap(*d.right); }
    std::string operator()(const spec::Semidirect& s) const { return wrap(*s.acting) + ":" + wrap(*s.normal); }
    std::string operator()(const spec::ScalarExtension& s) const {
      return "SE(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.s) + "," +
             std::to_string(s.lambda) + ")";
    }
    std::string operator()(const spec::CayleyTable& c) const { return "Table" + std::to_string(c.order); }
    std::string operator()(const spec::Permutations& p) const {
      std::string s = "<";
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) s += ",";
        s += cycle_label(encode_perm(p.generators[i]), p.degree);
      }
      return s + ">";
    }
    std::string operator()(const spec::LazardExp& l) const {
      std::string s = "exp(";
      for (std::size_t i = 0; i < l.lie.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(l.lie.basis_order(i));
      }
      return s + ";" + std::to_string(l.lie.nonzero_brackets().size()) + ")";
    }
  };
  return std::visit(Namer{}, v);
}

GroupSpec cyclic(std::uint64_t n) { return spec::Cyclic{n}; }
GroupSpec elementary_abelian(std::uint64_t p, unsigned r) { return spec::ElementaryAbelian{p, r}; }
GroupSpec dihedral(std::uint64_t n) { return spec::Dihedral{n}; }
GroupSpec quaternion8() { return spec::Quaternion8{}; }
GroupSpec symmetric(unsigned n) { return spec::Symmetric{n}; }
GroupSpec direct_product(GroupSpec a, GroupSpec b) {
  return spec::DirectProduct{std::make_shared<const GroupSpec>(std::move(a)),
                             std::make_shared<const GroupSpec>(std::move(b))};
}
GroupSpec semidirect(GroupSpec normal, GroupSpec acting, std::vector<std::vector<spec::ImageRef>> action) {
  return spec::Semidirect{std::make_shared<const GroupSpec>(std::move(normal)),
                          std::make_shared<const GroupSpec>(std::move(acting)), std::move(action)};
}
GroupSpec scalar_extension(std::uint64_t p, std::uint64_t q, unsigned s, std::int64_t lambda) {
  return spec::ScalarExtension{p, q, s, lambda};
}
GroupSpec permutations(unsigned degree, std::vector<std::vector<std::uint32_t>> gens) {
  return spec::Permutations{degree, std::move(gens)};
}
GroupSpec lazard_exp_spec(lie::LieRing l) { return spec::LazardExp{std::move(l)}; }

GroupSpec c3_on_q8() {
  return semidirect(quaternion8(), cyclic(3), {{std::string("j"), std::string("k")}});
}

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::InvalidSpec, "cannot parse group name \"" + whole + "\"");
  return std::stoull(s);
}

GroupSpec parse_factor(const std::string& f, const std::string& whole) {
  if (f == "Q8") return quaternion8();
  if (f == "C3:Q8") return c3_on_q8();
  if (f == "A4") return permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  if (f == "A5") return permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  if (f.rfind("Heis", 0) == 0) {
    const auto p = parse_uint(f.substr(4), whole);
    if (p == 2) return dihedral(4);
    if (!is_prime(p)) throw Error(ErrorKind::InvalidSpec, "Heisenberg group needs a prime");
    return lazard_exp_spec(lie::LieRing::make(static_cast<unsigned>(p), {1, 1, 1}, {{0, 1, {0, 0, 1}}}));
  }
  if (f.rfind("SE(", 0) == 0 && f.back() == ')') {
    std::vector<std::string> parts;
    std::stringstream ss(f.substr(3, f.size() - 4));
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4) throw Error(ErrorKind::InvalidSpec, "SE(p,q,s,lambda) needs four numbers");
    return scalar_extension(parse_uint(parts[0], whole), parse_uint(parts[1], whole),
                            static_cast<unsigned>(parse_uint(parts[2], whole)),
                            static_cast<std::int64_t>(parse_uint(parts[3], whole)));
  }
  if (f.size() >= 2 && (f[0] == 'C' || f[0] == 'E')) {
    const auto caret = f.find('^');
    const auto n = parse_uint(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), whole);
    if (caret == std::string::npos) {
      if (f[0] == 'E') throw Error(ErrorKind::InvalidSpec, "E<p>^<r> needs an exponent");
      return cyclic(n);
    }
    const auto r = static_cast<unsigned>(parse_uint(f.substr(caret + 1), whole));
    if (r == 0) return cyclic(1);
    if (is_prime(n)) return elementary_abelian(n, r);
    if (f[0] == 'E') throw Error(ErrorKind::InvalidSpec, "E<p>^<r> needs a prime");
    GroupSpec g = cyclic(n);
    for (unsigned i = 1; i < r; ++i) g = direct_product(g, cyclic(n));
    return g;
  }
  if (f.size() >= 2 && f[0] == 'D') return dihedral(parse_uint(f.substr(1), whole));
  if (f.size() >= 2 && f[0] == 'S') return symmetric(static_cast<unsigned>(parse_uint(f.substr(1), whole)));
  throw Error(ErrorKind::InvalidSpec, "unknown group name \"" + whole + "\"");
}

}  // namespace

GroupSpec parse_named(const std::string& name) {
  std::vector<std::string> factors;
  std::string cur;
  for (char c : name) {
    if (c == ' ') continue;
    if (c == 'x') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);
  GroupSpec g = parse_factor(factors[0], name);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_factor(factors[i], name));
  return g;
}

GroupSpec parse_group_spec(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return json::parse(text).get<GroupSpec>();
    } catch (const json::exception& e) {
      throw Error(ErrorKind::InvalidSpec, std::string("malformed group spec JSON: ") + e.what());
    }
  }
  std::ifstream in(text);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_spec(ss.str());
  }
  return parse_named(text);
}

void to_json(json& j, const GroupSpec& s) {
  struct Emitter {
    json& j;
    void operator()(const spec::Cyclic& c) const { j["n"] = c.n; }
    void operator()(const spec::ElementaryAbelian& e) const {
      j["p"] = e.p;
      j["r"] = e.r;
    }
    void operator()(const spec::Dihedral& d) const { j["n"] = d.n; }
    void operator()(const spec::Quaternion8&) const {}
    void operator()(const spec::Symmetric& s) const { j["n"] = s.n; }
    void operator()(const spec::DirectProduct& d) const {
      j["left"] = *d.left;
      j["right"] = *d.right;
    }
    void operator()(const spec::Semidirect& s) const {
      j["normal"] = *s.normal;
      j["acting"] = *s.acting;
      json action = json::array();
      for (const auto& row : s.action) {
        json r = json::array();
        for (const auto& ref : row) {
          if (const auto* i = std::get_if<std::int64_t>(&ref))
            r.push_back(*i);
          else
            r.push_back(std::get<std::string>(ref));
        }
        action.push_back(std::move(r));
      }
      j["action"] = std::move(action);
    }
    void operator()(const spec::ScalarExtension& s) const {
      j["p"] = s.p;
      j["q"] = s.q;
      j["s"] = s.s;
      j["lambda"] = s.lambda;
    }
    void operator()(const spec::CayleyTable& c) const {
      j["order"] = c.order;
      j["table"] = c.table;
    }
    void operator()(const spec::Permutations& p) const {
      j["degree"] = p.degree;
      j["generators"] = p.generators;
    }
    void operator()(const spec::LazardExp& l) const { j["lie"] = l.lie; }
  };
  j = json::object();
  j["kind"] = s.kind();
  std::visit(Emitter{j}, s.v);
}

void from_json(const json& j, GroupSpec& s) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    auto sub = [&](const char* key) { return std::make_shared<const GroupSpec>(j.at(key).get<GroupSpec>()); };
    if (kind == "cyclic") {
      s = spec::Cyclic{j.at("n").get<std::uint64_t>()};
    } else if (kind == "elementary_abelian") {
      s = spec::ElementaryAbelian{j.at("p").get<std::uint64_t>(), j.at("r").get<unsigned>()};
    } else if (kind == "dihedral") {
      s = spec::Dihedral{j.at("n").get<std::uint64_t>()};
    } else if (kind == "quaternion8") {
      s = spec::Quaternion8{};
    } else if (kind == "symmetric") {
      s = spec::Symmetric{j.at("n").get<unsigned>()};
    } else if (kind == "direct_product") {
      s = spec::DirectProduct{sub("left"), sub("right")};
    } else if (kind == "semidirect") {
      spec::Semidirect sd{sub("normal"), sub("acting"), {}};
      for (const auto& row : j.at("action")) {
        std::vector<spec::ImageRef> r;
        for (const auto& v : row) {
          if (v.is_string())
            r.emplace_back(v.get<std::string>());
          else
            r.emplace_back(v.get<std::int64_t>());
        }
        sd.action.push_back(std::move(r));
      }
      s = std::move(sd);
    } else if (kind == "scalar_extension") {
      s = spec::ScalarExtension{j.at("p").get<std::uint64_t>(), j.at("q").get<std::uint64_t>(),
                                j.at("s").get<unsigned>(), j.at("lambda").get<std::int64_t>()};
    } else if (kind == "cayley_table") {
      s = spec::CayleyTable{j.at("order").get<std::size_t>(), j.at("table").get<std::vector<Element>>()};
    } else if (kind == "permutations") {
      s = spec::Permutations{j.at("degree").get<unsigned>(),
                             j.at("generators").get<std::vector<std::vector<std::uint32_t>>>()};
    } else if (kind == "lazard_exp") {
      s = spec::LazardExp{j.at("lie").get<lie::LieRing>()};
    } else {
      throw Error(ErrorKind::InvalidSpec, "unknown group kind \"" + kind + "\"");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("malformed group spec: ") + e.what());
  }
}

std::string to_canonical_json(const GroupSpec& s) { return json(s).dump(); }

}  // namespace verba
