#include "reality/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "reality/errors.hpp"

namespace reality {

namespace {

bool prime_power(unsigned q) {
  if (q < 2) return false;
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

void check_matrix_params(unsigned n, unsigned q) {
  if (n == 0) throw UnknownFamily("matrix families need dimension at least 1");
  if (n > 2)
    throw BudgetExceeded("matrix family dimension " + std::to_string(n) +
                         " exceeds the supported cap of 2");
  if (!prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  static constexpr unsigned kAllowed[] = {2, 3, 4, 5, 7, 8, 9};
  if (std::find(std::begin(kAllowed), std::end(kAllowed), q) == std::end(kAllowed))
    throw BudgetExceeded("field size " + std::to_string(q) +
                         " is outside the supported set {2,3,4,5,7,8,9}");
}

// Elementary transvections with the off-diagonal entry running over the
// F_p-basis 1, t, ..., t^(d-1); these generate SL_2(F_q).
std::vector<FqMat> sl2_generators(const FqField& field) {
  std::vector<FqMat> gens;
  std::uint8_t basis = 1;
  for (unsigned i = 0; i < field.degree(); ++i) {
    FqMat upper = FqMat::identity_matrix(2);
    upper.at(0, 1) = basis;
    FqMat lower = FqMat::identity_matrix(2);
    lower.at(1, 0) = basis;
    gens.push_back(upper);
    gens.push_back(lower);
    basis = std::uint8_t(basis * field.characteristic());
  }
  return gens;
}

GroupPtr trivial_group(std::size_t budget) { return make_permutation_group(1, {}, budget); }

}  // namespace

GroupPtr make_symmetric(unsigned n, std::size_t element_budget) {
  if (n > 10)
    throw BudgetExceeded("symmetric degree " + std::to_string(n) + " exceeds the cap of 10");
  if (n <= 1) return trivial_group(element_budget);
  std::vector<unsigned> full(n);
  std::iota(full.begin(), full.end(), 0u);
  const std::vector<Perm> gens = {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {full})};
  return make_permutation_group(n, gens, element_budget);
}

GroupPtr make_alternating(unsigned n, std::size_t element_budget) {
  if (n > 10)
    throw BudgetExceeded("alternating degree " + std::to_string(n) + " exceeds the cap of 10");
  if (n <= 2) return trivial_group(element_budget);
  std::vector<Perm> gens;
  for (unsigned i = 0; i + 2 < n; ++i) gens.push_back(Perm::from_cycles(n, {{i, i + 1, i + 2}}));
  return make_permutation_group(n, gens, element_budget);
}

GroupPtr make_dihedral(unsigned n, std::size_t element_budget) {
  if (n == 0) throw UnknownFamily("there is no dihedral group of order 0");
  if (n > 512)
    throw BudgetExceeded("dihedral parameter " + std::to_string(n) + " exceeds the cap of 512");
  // The n-gon action is faithful of order 2n only for n >= 3.
  if (n == 1) return make_permutation_group(2, {Perm::from_cycles(2, {{0, 1}})}, element_budget);
  if (n == 2)
    return make_permutation_group(
        4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})}, element_budget);
  std::vector<std::uint16_t> rot(n), ref(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = std::uint16_t((i + 1) % n);
    ref[i] = std::uint16_t((n - i) % n);
  }
  return make_permutation_group(n, {Perm(std::move(rot)), Perm(std::move(ref))}, element_budget);
}

GroupPtr make_cyclic(unsigned n, std::size_t element_budget) {
  if (n == 0) throw UnknownFamily("there is no cyclic group of order 0");
  if (n > 512)
    throw BudgetExceeded("cyclic order " + std::to_string(n) + " exceeds the cap of 512");
  if (n == 1) return trivial_group(element_budget);
  std::vector<std::uint16_t> shift(n);
  for (unsigned i = 0; i < n; ++i) shift[i] = std::uint16_t((i + 1) % n);
  return make_permutation_group(n, {Perm(std::move(shift))}, element_budget);
}

GroupPtr make_quaternion8() {
  // Basis order 1, i, j, k; sgn[a][b] = 1 when basis a times basis b
  // carries a minus sign. Element index = 2*basis + sign.
  static constexpr unsigned kBas[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr unsigned kSgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<EIdx>> table(8, std::vector<EIdx>(8));
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      const unsigned a = x >> 1, s = x & 1, b = y >> 1, t = y & 1;
      table[x][y] = EIdx((kBas[a][b] << 1) | (s ^ t ^ kSgn[a][b]));
    }
  return make_cayley_group(std::move(table));
}

std::shared_ptr<const FqField> make_field(unsigned q) {
  if (q > 81) {
    if (!prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    throw BudgetExceeded("field size " + std::to_string(q) + " exceeds the cap of 81");
  }
  return std::make_shared<const FqField>(q);
}

GroupPtr make_special_linear(unsigned n, unsigned q, std::size_t element_budget) {
  check_matrix_params(n, q);
  auto field = make_field(q);
  if (n == 1) return make_matrix_group(std::move(field), 1, {}, element_budget);
  const auto gens = sl2_generators(*field);
  return make_matrix_group(std::move(field), 2, gens, element_budget);
}

GroupPtr make_general_linear(unsigned n, unsigned q, std::size_t element_budget) {
  check_matrix_params(n, q);
  auto field = make_field(q);
  const std::uint8_t z = field->primitive_element();
  if (n == 1) {
    FqMat m;
    m.n = 1;
    m.e = {z};
    return make_matrix_group(std::move(field), 1, {m}, element_budget);
  }
  auto gens = sl2_generators(*field);
  FqMat diag = FqMat::identity_matrix(2);
  diag.at(0, 0) = z;
  gens.push_back(diag);
  return make_matrix_group(std::move(field), 2, gens, element_budget);
}

std::vector<std::pair<std::string, GroupPtr>> cover_candidates() {
  std::vector<std::pair<std::string, GroupPtr>> out;
  out.emplace_back("Atilde4", make_special_linear(2, 3));
  out.emplace_back("Atilde5", make_special_linear(2, 5));
  out.emplace_back("Stilde4-candidate", make_general_linear(2, 3));
  return out;
}

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  void expect(char c, const char* context) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "' " + context, pos);
    ++pos;
  }

  unsigned parse_number(const char* what) {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(std::string("expected ") + what, pos);
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + unsigned(s[pos] - '0');
      if (v > 1'000'000'000) throw ParseError("number too large", pos);
      ++pos;
    }
    return unsigned(v);
  }

  std::string read_word() {
    skip_ws();
    std::string w;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
      w.push_back(char(std::tolower(static_cast<unsigned char>(s[pos++]))));
    return w;
  }

  FamilySpec parse_spec() {
    FamilySpec left = parse_atom();
    for (;;) {
      skip_ws();
      if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
        ++pos;
        FamilySpec prod;
        prod.tag = FamilyTag::Product;
        prod.subs.push_back(std::move(left));
        prod.subs.push_back(parse_atom());
        left = std::move(prod);
      } else {
        return left;
      }
    }
  }

  FamilySpec parse_atom() {
    skip_ws();
    const std::size_t start = pos;
    const std::string word = read_word();
    if (word.empty()) throw ParseError("expected a group spec", start);

    FamilySpec out;
    if (word == "sdp") {
      out.tag = FamilyTag::Semidirect;
      expect('(', "after sdp");
      out.subs.push_back(parse_spec());
      expect(',', "between the sdp factors");
      out.subs.push_back(parse_spec());
      expect(',', "before the action index");
      out.action_index = parse_number("an action index");
      expect(')', "closing sdp");
      return out;
    }
    if (word == "sl" || word == "gl") {
      out.tag = word == "sl" ? FamilyTag::SL : FamilyTag::GL;
      expect('(', "after the matrix family tag");
      out.n = parse_number("a dimension");
      expect(',', "between dimension and field size");
      out.q = parse_number("a field size");
      expect(')', "closing the matrix family");
      return out;
    }
    if (word == "q") {
      if (parse_number("8 after Q") != 8)
        throw ParseError("the quaternion family is spelled Q8", start);
      out.tag = FamilyTag::Q8;
      return out;
    }
    if (word == "perm") {
      expect(':', "after perm");
      return parse_perm_body();
    }
    if (word.size() == 1 && (word[0] == 's' || word[0] == 'a' || word[0] == 'd' || word[0] == 'c')) {
      out.tag = word[0] == 's'   ? FamilyTag::S
                : word[0] == 'a' ? FamilyTag::A
                : word[0] == 'd' ? FamilyTag::D
                                 : FamilyTag::C;
      out.n = parse_number("a family parameter");
      return out;
    }
    throw ParseError("unknown family tag '" + word + "'", start);
  }

  std::vector<unsigned> parse_cycle() {
    expect('(', "to open a cycle");
    std::vector<unsigned> cyc;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) throw ParseError("unterminated cycle", pos);
      const char c = s[pos];
      if (c == ')') {
        ++pos;
        break;
      }
      if (c == ',') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t at = pos;
        const unsigned pt = parse_number("a point");
        if (pt == 0) throw ParseError("cycle points are 1-based", at);
        if (pt > 1024) throw ParseError("point exceeds the degree cap of 1024", at);
        cyc.push_back(pt);
        continue;
      }
      throw ParseError("expected a point, ',' or ')'", pos);
    }
    std::vector<unsigned> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("point repeated within a cycle", pos);
    return cyc;
  }

  FamilySpec parse_perm_body() {
    std::vector<std::vector<std::vector<unsigned>>> gens;
    unsigned max_point = 1;
    for (;;) {
      std::vector<std::vector<unsigned>> cycles;
      cycles.push_back(parse_cycle());
      while (peek() == '(') cycles.push_back(parse_cycle());
      for (const auto& cyc : cycles)
        for (const unsigned pt : cyc) max_point = std::max(max_point, pt);
      gens.push_back(std::move(cycles));
      // A ',' or ';' continues the generator list only when another cycle
      // follows; otherwise it belongs to an enclosing construct.
      const std::size_t save = pos;
      skip_ws();
      if (pos < s.size() && (s[pos] == ',' || s[pos] == ';')) {
        ++pos;
        if (peek() == '(') continue;
        pos = save;
      }
      break;
    }

    FamilySpec out;
    out.tag = FamilyTag::Perm;
    out.n = max_point;
    for (const auto& cycles : gens) {
      Perm g = Perm::identity(max_point);
      for (const auto& cyc : cycles) {
        std::vector<unsigned> zero_based;
        zero_based.reserve(cyc.size());
        for (const unsigned pt : cyc) zero_based.push_back(pt - 1);
        // Right-to-left composition, so non-disjoint cycles multiply as
        // written.
        g = g.compose(Perm::from_cycles(max_point, {zero_based}));
      }
      out.perm_generators.push_back(std::move(g));
    }
    return out;
  }
};

GroupPtr construct_semidirect(const FamilySpec& spec, std::size_t budget) {
  GroupPtr a = construct(spec.subs.at(0), budget);
  GroupPtr b = construct(spec.subs.at(1), budget);
  const std::vector<Automorphism> autos = enumerate_automorphisms(*a);
  if (spec.action_index >= autos.size())
    throw UnknownFamily("sdp action index " + std::to_string(spec.action_index) +
                        " out of range: the left factor has " + std::to_string(autos.size()) +
                        " automorphisms");
  const Automorphism& phi = autos[spec.action_index];

  const std::size_t m = b->order();
  EIdx gen = b->identity();
  for (EIdx x = 0; x < EIdx(m); ++x)
    if (b->element_order(x) == m) {
      gen = x;
      break;
    }
  if (m > 1 && b->element_order(gen) != m)
    throw UnknownFamily("sdp needs a cyclic right factor to index the action");

  std::vector<unsigned> dlog(m, 0);
  EIdx cur = b->identity();
  for (unsigned j = 0; j < m; ++j) {
    dlog[cur] = j;
    cur = b->mult(cur, gen);
  }

  Automorphism ident;
  ident.image.resize(a->order());
  std::iota(ident.image.begin(), ident.image.end(), EIdx(0));
  std::vector<Automorphism> powers(m);
  powers[0] = ident;
  for (unsigned j = 1; j < m; ++j) powers[j] = phi.compose(powers[j - 1]);
  if (!(phi.compose(powers[m - 1]) == ident))
    throw NotAHomomorphism("the chosen automorphism's order does not divide the right factor's order " +
                           std::to_string(m));

  std::vector<Automorphism> action(m);
  for (std::size_t x = 0; x < m; ++x) action[x] = powers[dlog[x]];
  return semidirect_product(std::move(a), std::move(b), std::move(action), budget);
}

}  // namespace

FamilySpec parse_group_spec(const std::string& text) {
  SpecParser parser(text);
  FamilySpec spec = parser.parse_spec();
  parser.skip_ws();
  if (parser.pos < text.size()) throw ParseError("unexpected trailing text", parser.pos);
  return spec;
}

GroupPtr construct(const FamilySpec& spec, std::size_t element_budget) {
  switch (spec.tag) {
    case FamilyTag::S:
      return make_symmetric(spec.n, element_budget);
    case FamilyTag::A:
      return make_alternating(spec.n, element_budget);
    case FamilyTag::D:
      return make_dihedral(spec.n, element_budget);
    case FamilyTag::C:
      return make_cyclic(spec.n, element_budget);
    case FamilyTag::Q8:
      return make_quaternion8();
    case FamilyTag::SL:
      return make_special_linear(spec.n, spec.q, element_budget);
    case FamilyTag::GL:
      return make_general_linear(spec.n, spec.q, element_budget);
    case FamilyTag::Product:
      return direct_product(construct(spec.subs.at(0), element_budget),
                            construct(spec.subs.at(1), element_budget), element_budget);
    case FamilyTag::Semidirect:
      return construct_semidirect(spec, element_budget);
    case FamilyTag::Perm:
      return make_permutation_group(spec.n, spec.perm_generators, element_budget);
    case FamilyTag::Cayley:
      return make_cayley_group(spec.table);
  }
  throw UnknownFamily("unhandled family tag");
}

GroupPtr build_group(const std::string& text, std::size_t element_budget) {
  return construct(parse_group_spec(text), element_budget);
}

}  // namespace reality
