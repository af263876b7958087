#ifndef IRRED_MEASURE_VALUE_HPP
#define IRRED_MEASURE_VALUE_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irred {

/** \brief Exact fixed-point rational with denominator 10^4. */
class MeasureValue {
public:
  static constexpr std::int64_t scale = 10000;

  constexpr MeasureValue() = default;
  static constexpr MeasureValue from_raw(std::int64_t raw) {
    MeasureValue m;
    m.raw_ = raw;
    return m;
  }
  static constexpr MeasureValue from_int(std::int64_t x) {
    return from_raw(x * scale);
  }

  // Accepts "3", "-0.7455", "7455/10000", "1/2". Rejects anything whose
  // exact value is not a multiple of 10^-4.
  static MeasureValue parse(std::string_view s) {
    auto fail = [&] {
      throw std::invalid_argument("not an exact 1e-4 rational: " +
                                  std::string(s));
    };
    if (s.empty())
      fail();
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      std::int64_t num = parse_int(s.substr(0, slash), fail);
      std::int64_t den = parse_int(s.substr(slash + 1), fail);
      if (den <= 0 || (num * scale) % den != 0)
        fail();
      return from_raw(num * scale / den);
    }
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view ip = s.substr(0, dot);
    std::string_view fp =
        dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      fail();
    while (fp.size() > 4 && fp.back() == '0')
      fp.remove_suffix(1);
    if (fp.size() > 4)
      fail();
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip, fail);
    std::int64_t frac = fp.empty() ? 0 : parse_int(fp, fail);
    for (std::size_t i = fp.size(); i < 4; ++i)
      frac *= 10;
    std::int64_t raw = whole * scale + frac;
    return from_raw(neg ? -raw : raw);
  }

  constexpr std::int64_t raw() const { return raw_; }
  double to_double() const { return static_cast<double>(raw_) / scale; }

  std::string to_string() const {
    std::int64_t a = raw_ < 0 ? -raw_ : raw_;
    std::string frac = std::to_string(a % scale);
    frac.insert(0, 4 - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0')
      frac.pop_back();
    std::string out = (raw_ < 0 ? "-" : "") + std::to_string(a / scale);
    if (!frac.empty())
      out += "." + frac;
    return out;
  }

  constexpr MeasureValue operator+(MeasureValue o) const {
    return from_raw(raw_ + o.raw_);
  }
  constexpr MeasureValue operator-(MeasureValue o) const {
    return from_raw(raw_ - o.raw_);
  }
  constexpr MeasureValue operator-() const { return from_raw(-raw_); }
  constexpr MeasureValue operator*(std::int64_t c) const {
    return from_raw(raw_ * c);
  }
  MeasureValue &operator+=(MeasureValue o) {
    raw_ += o.raw_;
    return *this;
  }
  MeasureValue &operator-=(MeasureValue o) {
    raw_ -= o.raw_;
    return *this;
  }
  constexpr auto operator<=>(const MeasureValue &) const = default;

private:
  template <class F>
  static std::int64_t parse_int(std::string_view s, F &&fail) {
    if (s.empty() || s.size() > 15)
      fail();
    std::int64_t x = 0;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-') {
      neg = true;
      i = 1;
      if (s.size() == 1)
        fail();
    }
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        fail();
      x = x * 10 + (s[i] - '0');
    }
    return neg ? -x : x;
  }

  std::int64_t raw_ = 0;
};

/** \brief Measure & Conquer weights (omega_l, omega_n). */
struct Weights {
  MeasureValue omega_l = MeasureValue::from_raw(7455);
  MeasureValue omega_n = MeasureValue::from_raw(2455);

  static Weights standard() { return {}; }

  bool feasible() const {
    const auto zero = MeasureValue::from_int(0);
    const auto half = MeasureValue::from_raw(5000);
    const auto one = MeasureValue::from_int(1);
    return zero <= omega_n && omega_n <= half && half <= omega_l &&
           omega_l <= one && omega_n + omega_l <= one;
  }

  static Weights make(MeasureValue wl, MeasureValue wn) {
    Weights w{wl, wn};
    if (!w.feasible())
      throw std::invalid_argument("weights outside the feasible region");
    return w;
  }
};

} // namespace irred

#endif
