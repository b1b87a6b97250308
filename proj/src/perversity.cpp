#include "ihc/perversity.hpp"

#include <sstream>

namespace ihc {

namespace {

std::vector<int> codims_of(const WeightedComplex& cx) {
  std::vector<int> out;
  for (const auto& s : cx.strata()) out.push_back(s.codim);
  return out;
}

}  // namespace

Perversity Perversity::by_codim(const WeightedComplex& cx, const std::function<ExtInt(int)>& f) {
  std::vector<ExtInt> values;
  for (const auto& s : cx.strata()) values.push_back(s.singular() ? f(s.codim) : ExtInt(0));
  return Perversity(cx.fingerprint(), codims_of(cx), std::move(values), Mode::PerStratum);
}

Perversity Perversity::zero(const WeightedComplex& cx) {
  return by_codim(cx, [](int) { return ExtInt(0); });
}

Perversity Perversity::top(const WeightedComplex& cx) {
  return by_codim(cx, [](int c) { return ExtInt(c - 2); });
}

Perversity Perversity::constant(const WeightedComplex& cx, ExtInt value) {
  return by_codim(cx, [value](int) { return value; });
}

Perversity Perversity::gm(const WeightedComplex& cx, const std::vector<long>& v) {
  for (std::size_t c = 0; c < v.size() && c <= 2; ++c)
    if (v[c] != 0) throw InputError("GM perversity must vanish in codimensions 0, 1, 2");
  for (std::size_t c = 1; c < v.size(); ++c)
    if (v[c] < v[c - 1] || v[c] > v[c - 1] + 1)
      throw InputError("GM perversity violates p(i) <= p(i+1) <= p(i)+1 at codimension " + std::to_string(c));
  for (const auto& s : cx.strata())
    if (static_cast<std::size_t>(s.codim) >= v.size())
      throw InputError("GM perversity has no value for codimension " + std::to_string(s.codim));
  Perversity p = by_codim(cx, [&](int c) { return ExtInt(v[static_cast<std::size_t>(c)]); });
  p.mode_ = Mode::GM;
  return p;
}

Perversity Perversity::with_values(const WeightedComplex& cx, std::vector<ExtInt> values) {
  if (values.size() != cx.strata().size()) throw InputError("perversity needs one value per stratum");
  for (const auto& s : cx.strata())
    if (!s.singular() && values[s.id] != ExtInt(0)) throw InputError("perversity must vanish on regular strata");
  return Perversity(cx.fingerprint(), codims_of(cx), std::move(values), Mode::PerStratum);
}

Perversity Perversity::parse(const WeightedComplex& cx, std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::string head;
  if (!(in >> head)) throw InputError("empty perversity spec");
  if (head == "zero") return zero(cx);
  if (head == "top") return top(cx);
  if (head == "const") {
    std::string v;
    if (!(in >> v)) throw InputError("const perversity needs a value");
    return constant(cx, ExtInt::parse(v));
  }
  if (head == "gm") {
    std::vector<long> values;
    std::string tok;
    while (in >> tok) {
      ExtInt e = ExtInt::parse(tok);
      if (!e.finite()) throw InputError("GM perversity values must be finite");
      values.push_back(e.value());
    }
    return gm(cx, values);
  }
  if (head == "stratum") {
    std::vector<ExtInt> values(cx.strata().size(), ExtInt(0));
    std::string tok;
    while (in >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw InputError("stratum perversity entries look like <index>:<value>");
      std::size_t id = 0;
      try {
        id = std::stoul(tok.substr(0, colon));
      } catch (const std::exception&) {
        throw InputError("bad stratum index: " + tok);
      }
      if (id >= values.size()) throw InputError("no stratum with index " + std::to_string(id));
      values[id] = ExtInt::parse(tok.substr(colon + 1));
    }
    return with_values(cx, std::move(values));
  }
  throw InputError("unknown perversity spec: " + std::string(spec));
}

ExtInt Perversity::operator()(const Stratum& s) const {
  if (s.owner != owner_) throw InputError("perversity evaluated on a stratum of a different complex");
  return values_.at(s.id);
}

Perversity Perversity::dual() const {
  std::vector<ExtInt> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = codims_[i] == 0 ? ExtInt(0) : ExtInt(codims_[i] - 2) - values_[i];
  return Perversity(owner_, codims_, std::move(v), Mode::PerStratum);
}

Perversity Perversity::operator+(const Perversity& o) const {
  if (owner_ != o.owner_) throw InputError("adding perversities of different complexes");
  std::vector<ExtInt> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return Perversity(owner_, codims_, std::move(v), Mode::PerStratum);
}

bool Perversity::operator<=(const Perversity& o) const {
  if (owner_ != o.owner_) throw InputError("comparing perversities of different complexes");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > o.values_[i]) return false;
  return true;
}

Perversity Perversity::rebind(const WeightedComplex& other) const {
  if (other.strata().size() != values_.size()) throw InputError("stratum count mismatch when rebinding perversity");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (other.strata()[i].codim != codims_[i]) throw InputError("codimension mismatch when rebinding perversity");
  Perversity p = *this;
  p.owner_ = other.fingerprint();
  return p;
}

Perversity Perversity::pullback(const WeightedComplex& coarse, const WeightedComplex& fine) const {
  if (coarse.fingerprint() != owner_) throw InputError("perversity does not belong to the coarse complex");
  std::vector<ExtInt> v;
  for (const auto& s : fine.strata()) {
    const Stratum& c = coarse.stratum_of(s.simplices.front());
    if (s.codim < c.codim) throw InputError("recoding lowers a codimension; not a stratified map");
    v.push_back(s.singular() ? values_[c.id] : ExtInt(0));
  }
  return Perversity(fine.fingerprint(), codims_of(fine), std::move(v), Mode::PerStratum);
}

std::string Perversity::to_string() const {
  std::ostringstream out;
  out << "stratum";
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (codims_[i] > 0) out << ' ' << i << ':' << values_[i].to_string();
  return out.str();
}

std::vector<std::vector<long>> gm_perversities(int max_codim, long max_value) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void()> rec = [&]() {
    int c = static_cast<int>(cur.size());
    if (c > max_codim) {
      out.push_back(cur);
      return;
    }
    if (c <= 2) {
      cur.push_back(0);
      rec();
      cur.pop_back();
      return;
    }
    for (long step = 0; step <= 1; ++step) {
      long v = cur.back() + step;
      if (v > max_value) continue;
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace ihc
