#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alglength/algebra.hpp"

// Text format for algebras (version 1), line oriented, '#' starts a comment:
//
//   alglength-algebra v1
//   field rational            | field prime <p>
//   dim <n>
//   basis 1 <name_1> ... <name_{n-1}>
//   prod <a> <b> = <term> (+ <term>)*
//   lc true|false             (optional, default false)
//
// A term is <scalar>*<name>, a bare <name>, or <scalar>*1, and a scalar is
// -?[0-9]+(/[0-9]+)? in lowest terms. Products with the unit are implied and
// must not be listed; unlisted products are zero.

namespace alglength {

inline constexpr std::string_view algebra_header = "alglength-algebra v1";

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_ws(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? at : at - start)));
    if (at == std::string_view::npos)
      return out;
    start = at + 1;
  }
}

inline bool is_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

inline bool is_valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

} // namespace detail

/// Parses -?[0-9]+(/[0-9]+)? into the given field. Rejects leading zeros,
/// "-0", zero denominators and fractions not in lowest terms. Over GF(p)
/// the denominator must be invertible mod p.
inline Scalar parse_scalar(const FieldDescriptor &field, std::string_view text,
                           std::optional<std::size_t> line = std::nullopt) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const std::size_t slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto canonical_digits = [](std::string_view d) {
    return detail::is_digits(d) && (d.size() == 1 || d[0] != '0');
  };
  if (!canonical_digits(num_text) || !canonical_digits(den_text))
    throw BadScalar("malformed scalar '" + original + "'", line);
  Integer num{std::string(num_text)};
  const Integer den{std::string(den_text)};
  if (den == 0)
    throw BadScalar("zero denominator in '" + original + "'", line);
  if (negative && num == 0)
    throw BadScalar("negative zero '" + original + "'", line);
  if (boost::multiprecision::gcd(num, den) != 1)
    throw BadScalar("fraction '" + original + "' is not in lowest terms", line);
  if (negative)
    num = -num;
  try {
    return Scalar::from_fraction(field, num, den);
  } catch (const DivisionByZero &) {
    throw BadScalar("denominator of '" + original + "' vanishes in " + field.to_string(), line);
  }
}

/// Reads a v1 algebra file. The result is validated unital, and a claimed
/// lc flag is verified against the basis.
inline StructureTable parse_algebra(std::string_view text) {
  std::optional<FieldDescriptor> field;
  std::optional<std::size_t> dim;
  std::optional<StructureTable> table;
  std::optional<bool> lc;
  bool seen_header = false;
  std::set<std::pair<std::size_t, std::size_t>> listed;

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    const std::string line = detail::trim(raw);
    if (line.empty())
      continue;
    const auto tok = detail::split_ws(line);

    if (!seen_header) {
      if (line != algebra_header)
        throw SyntaxError("expected header '" + std::string(algebra_header) + "'", lineno);
      seen_header = true;
      continue;
    }
    const std::string &key = tok[0];
    if (key == "field") {
      if (field)
        throw SyntaxError("field given twice", lineno);
      if (tok.size() == 2 && tok[1] == "rational") {
        field = FieldDescriptor::rational();
      } else if (tok.size() == 3 && tok[1] == "prime" && detail::is_digits(tok[2]) &&
                 tok[2].size() <= 10) {
        try {
          field = FieldDescriptor::prime(std::stoull(tok[2]));
        } catch (const FieldError &e) {
          throw SyntaxError(e.what(), lineno);
        }
      } else {
        throw SyntaxError("expected 'field rational' or 'field prime <p>'", lineno);
      }
    } else if (key == "dim") {
      if (!field)
        throw SyntaxError("'dim' before 'field'", lineno);
      if (dim)
        throw SyntaxError("dim given twice", lineno);
      if (tok.size() != 2 || !detail::is_digits(tok[1]) || tok[1].size() > 6 ||
          std::stoul(tok[1]) < 1)
        throw SyntaxError("expected 'dim <n>' with n >= 1", lineno);
      dim = std::stoul(tok[1]);
    } else if (key == "basis") {
      if (!dim)
        throw SyntaxError("'basis' before 'dim'", lineno);
      if (table)
        throw SyntaxError("basis given twice", lineno);
      if (tok.size() < 2 || tok[1] != "1")
        throw SyntaxError("basis must start with the unit '1'", lineno);
      std::vector<std::string> names(tok.begin() + 1, tok.end());
      if (names.size() != *dim)
        throw SyntaxError("basis lists " + std::to_string(names.size()) + " elements, dim is " +
                              std::to_string(*dim),
                          lineno);
      std::set<std::string> seen{"1"};
      for (std::size_t i = 1; i < names.size(); ++i) {
        if (!detail::is_valid_name(names[i]))
          throw SyntaxError("invalid basis name '" + names[i] + "'", lineno);
        if (!seen.insert(names[i]).second)
          throw SyntaxError("basis name '" + names[i] + "' repeated", lineno);
      }
      table.emplace(*field, std::move(names));
    } else if (key == "prod") {
      if (!table)
        throw SyntaxError("'prod' before 'basis'", lineno);
      if (tok.size() < 5 || tok[3] != "=" || tok.size() % 2 != 1)
        throw SyntaxError("expected 'prod <a> <b> = <term> (+ <term>)*'", lineno);
      auto lookup = [&](const std::string &name) {
        const std::size_t idx = table->index_of(name);
        if (idx == StructureTable::npos)
          throw UnknownBasisName("unknown basis name '" + name + "'", lineno);
        return idx;
      };
      const std::size_t i = lookup(tok[1]);
      const std::size_t j = lookup(tok[2]);
      if (i == 0 || j == 0)
        throw UnitProduct("products with the unit are implied and must not be listed", lineno);
      if (!listed.insert({i, j}).second)
        throw DuplicateProduct("product " + tok[1] + " " + tok[2] + " listed twice", lineno);
      Vector value = zero_vector(*field, *dim);
      for (std::size_t t = 4; t < tok.size(); t += 2) {
        if (t > 4 && tok[t - 1] != "+")
          throw SyntaxError("terms must be separated by '+'", lineno);
        const std::string &term = tok[t];
        const std::size_t star = term.find('*');
        Scalar coeff = Scalar::one(*field);
        std::string name = term;
        if (star != std::string::npos) {
          coeff = parse_scalar(*field, std::string_view(term).substr(0, star), lineno);
          name = term.substr(star + 1);
        }
        value[lookup(name)] += coeff;
      }
      table->set_product(i, j, value);
    } else if (key == "lc") {
      if (lc)
        throw SyntaxError("lc given twice", lineno);
      if (tok.size() != 2 || (tok[1] != "true" && tok[1] != "false"))
        throw SyntaxError("expected 'lc true' or 'lc false'", lineno);
      lc = tok[1] == "true";
    } else {
      throw SyntaxError("unknown directive '" + key + "'", lineno);
    }
  }

  if (!seen_header)
    throw SyntaxError("empty algebra file");
  if (!table)
    throw SyntaxError("missing field, dim or basis line");
  if (!validate_unital(*table))
    throw NonUnital("parsed table is not unital");
  if (lc.value_or(false)) {
    if (field->is_prime())
      throw PrimeFieldNotAllowed("lc true needs the rational field");
    if (!check_lc_basis(*table))
      throw LcClaimFalse("the basis does not satisfy e_i^2 = -1 and anticommutation");
    table->set_lc_flag(true);
  }
  return std::move(*table);
}

/// Writes the canonical v1 text: products in (i, j) order, terms in basis
/// order, coefficient 1 written as a bare name.
inline std::string serialize_algebra(const StructureTable &a) {
  std::ostringstream out;
  out << algebra_header << '\n';
  out << "field " << a.field().to_string() << '\n';
  out << "dim " << a.dim() << '\n';
  out << "basis";
  for (const auto &name : a.basis_names())
    out << ' ' << name;
  out << '\n';
  const auto &names = a.basis_names();
  for (std::size_t i = 1; i < a.dim(); ++i)
    for (std::size_t j = 1; j < a.dim(); ++j) {
      const Vector v = a.product(i, j);
      if (is_zero(v))
        continue;
      out << "prod " << names[i] << ' ' << names[j] << " =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
          continue;
        out << (first ? " " : " + ");
        first = false;
        if (v[k].is_one())
          out << names[k];
        else
          out << v[k].to_string() << '*' << names[k];
      }
      out << '\n';
    }
  out << "lc " << (a.lc_flag() ? "true" : "false") << '\n';
  return out.str();
}

/// Parses a generating-set argument: specs separated by ';', each either a
/// comma-separated list of basis names (one basis vector per name) or a
/// coordinate row "[c_0, c_1, ...]".
inline GenSet parse_gens(const StructureTable &a, std::string_view text) {
  GenSet gens;
  for (const auto &spec : detail::split_on(text, ';')) {
    if (spec.empty())
      throw SyntaxError("empty generator spec in '" + std::string(text) + "'");
    if (spec.front() == '[') {
      if (spec.back() != ']')
        throw SyntaxError("unterminated coordinate row '" + spec + "'");
      const auto cells =
          detail::split_on(std::string_view(spec).substr(1, spec.size() - 2), ',');
      if (cells.size() != a.dim())
        throw ShapeError("coordinate row has " + std::to_string(cells.size()) +
                         " entries, the algebra has dimension " + std::to_string(a.dim()));
      Vector v;
      for (const auto &c : cells)
        v.push_back(parse_scalar(a.field(), c));
      gens.vectors.push_back(std::move(v));
    } else {
      for (const auto &name : detail::split_on(spec, ',')) {
        const std::size_t idx = a.index_of(name);
        if (idx == StructureTable::npos)
          throw UnknownBasisName("unknown basis name '" + name + "'");
        gens.vectors.push_back(a.basis_vector(idx));
      }
    }
  }
  return gens;
}

/// Inverse of parse_gens for display: one coordinate row per vector.
inline std::string format_gens(const GenSet &gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ";";
    out += to_string(gens.vectors[i]);
  }
  return out;
}

} // namespace alglength
