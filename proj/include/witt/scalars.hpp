#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace witt {

enum class ErrorCode {
	MalformedNumber,
	ZeroDenominator,
	NoModuleFamily,
	ForeignBasisSymbol,
	WindowTooSmall,
	NotASubspace,
	DomainMismatch,
	InvalidAutForAlgebra,
	InvalidDerForAlgebra,
	DuplicateCentralName,
	ExtendedNotSupported,
};

const char *error_name(ErrorCode c);

class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, const std::string &what)
	    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
	{}
	ErrorCode code() const { return code_; }

  private:
	ErrorCode code_;
};

// Exact rational, always canonical (lowest terms, positive denominator).
class Rational
{
  public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	Rational(int v) : q_(v) {}
	Rational(long num, long den);
	explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

	const mpq_class &raw() const { return q_; }
	mpz_class num() const { return q_.get_num(); }
	mpz_class den() const { return q_.get_den(); }

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_integer() const { return q_.get_den() == 1; }
	int sign() const { return sgn(q_); }

	Rational operator-() const { return Rational(mpq_class(-q_)); }
	Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
	Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		       : c > 0 ? std::strong_ordering::greater
		               : std::strong_ordering::equal;
	}

	// integer power; negative exponents allowed for nonzero base
	Rational pow(long e) const;

	std::string str() const { return q_.get_str(); }

  private:
	mpq_class q_;
};

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational &q);

// λ ∈ Q ∪ {∞}
class LambdaParam
{
  public:
	LambdaParam() = default;
	static LambdaParam finite(const Rational &q) { return LambdaParam(false, q); }
	static LambdaParam infinity() { return LambdaParam(true, Rational(0)); }

	bool is_infinite() const { return inf_; }
	bool is_finite() const { return !inf_; }
	// only meaningful when finite
	const Rational &value() const;

	bool is(long v) const { return !inf_ && q_ == Rational(v); }

	friend bool operator==(const LambdaParam &a, const LambdaParam &b)
	{
		return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
	}

	std::string str() const { return inf_ ? "inf" : q_.str(); }

  private:
	LambdaParam(bool inf, const Rational &q) : inf_(inf), q_(q) {}
	bool inf_ = false;
	Rational q_;
};

LambdaParam parse_lambda(std::string_view text);

} // namespace witt
