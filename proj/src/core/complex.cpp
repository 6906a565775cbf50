#include "pbclass/complex.hpp"

#include "pbclass/error.hpp"

#include <cstdlib>
#include <sstream>

namespace pbclass {

Word Word::inverse() const {
  Word w;
  w.letters.assign(letters.rbegin(), letters.rend());
  for (int& l : w.letters) l = -l;
  return w;
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

Word Word::freely_reduced() const {
  Word w;
  for (int l : letters) {
    if (!w.letters.empty() && w.letters.back() == -l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

GroupRingElement GroupRingElement::one() { return of(Word{}); }

GroupRingElement GroupRingElement::of(const Word& w, const Integer& coeff) {
  GroupRingElement e;
  e.add_term(w, coeff);
  return e;
}

void GroupRingElement::add_term(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  const Word key = w.freely_reduced();
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) r.add_term(u.concat(v), a * b);
  return r;
}

// ---------------------------------------------------------------------------

TwoComplex::TwoComplex(std::size_t num_gens, std::vector<Word> relators,
                       std::string name, std::vector<std::string> gen_names)
    : num_gens_(num_gens), relators_(std::move(relators)), name_(std::move(name)),
      gen_names_(std::move(gen_names)) {
  if (gen_names_.empty())
    for (std::size_t i = 1; i <= num_gens_; ++i)
      gen_names_.push_back("x" + std::to_string(i));
  if (gen_names_.size() != num_gens_)
    throw MismatchError("complex has " + std::to_string(num_gens_) +
                        " generators but " + std::to_string(gen_names_.size()) +
                        " names");
  for (const auto& r : relators_)
    for (int l : r.letters)
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > num_gens_)
        throw MismatchError("relator letter " + std::to_string(l) +
                            " out of range for " + std::to_string(num_gens_) +
                            " generators");
}

long TwoComplex::euler_characteristic() const {
  return 1 - static_cast<long>(num_gens_) + static_cast<long>(relators_.size());
}

IntMatrix TwoComplex::abelianized_relators() const {
  IntMatrix m(num_gens_, relators_.size());
  for (std::size_t j = 0; j < relators_.size(); ++j)
    for (int l : relators_[j].letters) m(std::abs(l) - 1, j) += l > 0 ? 1 : -1;
  return m;
}

std::string TwoComplex::format_word(const Word& w) const {
  std::ostringstream out;
  bool first = true;
  for (int l : w.letters) {
    out << (first ? "" : " ") << gen_names_[std::abs(l) - 1];
    if (l < 0) out << "^-1";
    first = false;
  }
  return out.str();
}

TwoComplex sphere() {
  TwoComplex x(0, {Word{}}, "sphere");
  x.kind_ = SurfaceKind::Sphere;
  return x;
}

TwoComplex orientable_surface(std::size_t g) {
  if (g == 0) return sphere();
  Word r;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) {
    const int a = static_cast<int>(2 * i + 1);
    const int b = a + 1;
    r.letters.insert(r.letters.end(), {a, b, -a, -b});
    names.push_back("a" + std::to_string(i + 1));
    names.push_back("b" + std::to_string(i + 1));
  }
  TwoComplex x(2 * g, {r}, "orientable:" + std::to_string(g), names);
  x.kind_ = SurfaceKind::Orientable;
  x.surface_param_ = g;
  return x;
}

TwoComplex nonorientable_surface(std::size_t k) {
  if (k == 0)
    throw MismatchError("nonorientable surface needs at least one crosscap");
  Word r;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) {
    const int a = static_cast<int>(i);
    r.letters.insert(r.letters.end(), {a, a});
    names.push_back("a" + std::to_string(i));
  }
  TwoComplex x(k, {r}, "nonorientable:" + std::to_string(k), names);
  x.kind_ = SurfaceKind::Nonorientable;
  x.surface_param_ = k;
  return x;
}

Word parse_word(std::string_view text, const std::vector<std::string>& gen_names) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int sign = 1;
    std::string name = token;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string exp = token.substr(caret + 1);
      if (exp == "-1")
        sign = -1;
      else if (exp != "1")
        throw SchemaError("bad exponent in word token '" + token +
                          "' (only ^1 and ^-1 are allowed)");
    }
    std::size_t idx = 0;
    while (idx < gen_names.size() && gen_names[idx] != name) ++idx;
    if (idx == gen_names.size())
      throw SchemaError("unknown generator '" + name + "' in word '" +
                        std::string(text) + "'");
    w.letters.push_back(sign * static_cast<int>(idx + 1));
  }
  return w;
}

GroupRingElement fox_derivative(const Word& w, int generator) {
  if (generator <= 0) throw MismatchError("generator index must be >= 1");
  for (int l : w.letters)
    if (l == 0) throw MismatchError("word contains letter 0");
  GroupRingElement d;
  Word prefix;
  for (int l : w.letters) {
    if (l == generator) {
      d.add_term(prefix, 1);
      prefix.letters.push_back(l);
    } else if (l == -generator) {
      prefix.letters.push_back(l);
      d.add_term(prefix, -1);
    } else {
      prefix.letters.push_back(l);
    }
  }
  return d;
}

GroupRingElement fox_derivative(const TwoComplex& x, const Word& w, int generator) {
  if (generator <= 0 || static_cast<std::size_t>(generator) > x.num_gens())
    throw MismatchError("generator index " + std::to_string(generator) +
                        " out of range 1.." + std::to_string(x.num_gens()));
  return fox_derivative(w, generator);
}

Presentation h1(const TwoComplex& x) {
  return from_presentation(x.num_gens(), x.abelianized_relators());
}

std::optional<std::vector<int>> orientation_signs(const TwoComplex& x) {
  switch (x.surface_kind()) {
  case SurfaceKind::None:
    return std::nullopt;
  case SurfaceKind::Nonorientable:
    return std::vector<int>(x.num_gens(), 1);
  default:
    return std::vector<int>(x.num_gens(), 0);
  }
}

std::optional<AbHom> orientation_character(const TwoComplex& x) {
  const auto signs = orientation_signs(x);
  if (!signs) return std::nullopt;
  const FgAbGroup z2 = FgAbGroup::cyclic(2);
  std::vector<AbElement> images;
  for (int s : *signs) images.push_back({{Integer(s)}});
  return hom_from_generator_images(h1(x), z2, images);
}

} // namespace pbclass
