#ifndef GROTHKIT_BIGINT_HPP
#define GROTHKIT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grothkit {

/// Signed arbitrary-precision integer, sign + magnitude in base 2^32.
/// Coefficients stay small in practice; schoolbook arithmetic is plenty.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt parse(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  bool fits_int64() const;
  long long to_int64() const;  // precondition: fits_int64()

  std::string str() const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian limbs, no leading zeros, empty iff zero

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // precondition: a >= b
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
};

}  // namespace grothkit

#endif
