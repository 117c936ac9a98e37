#include "witt/scalars.hpp"

#include <cctype>

namespace witt {

const char *error_name(ErrorCode c)
{
	switch (c)
	{
	case ErrorCode::MalformedNumber: return "MalformedNumber";
	case ErrorCode::ZeroDenominator: return "ZeroDenominator";
	case ErrorCode::NoModuleFamily: return "NoModuleFamily";
	case ErrorCode::ForeignBasisSymbol: return "ForeignBasisSymbol";
	case ErrorCode::WindowTooSmall: return "WindowTooSmall";
	case ErrorCode::NotASubspace: return "NotASubspace";
	case ErrorCode::DomainMismatch: return "DomainMismatch";
	case ErrorCode::InvalidAutForAlgebra: return "InvalidAutForAlgebra";
	case ErrorCode::InvalidDerForAlgebra: return "InvalidDerForAlgebra";
	case ErrorCode::DuplicateCentralName: return "DuplicateCentralName";
	case ErrorCode::ExtendedNotSupported: return "ExtendedNotSupported";
	}
	return "Unknown";
}

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw Error(ErrorCode::ZeroDenominator, std::to_string(num) + "/0");
	q_ = mpq_class(num, den);
	q_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw Error(ErrorCode::ZeroDenominator, "division by zero");
	q_ /= o.q_;
	return *this;
}

Rational Rational::pow(long e) const
{
	if (e < 0)
		return Rational(1) / pow(-e);
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
	mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
	return Rational(mpq_class(n, d));
}

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	std::string_view body = text;
	bool neg = false;
	if (!body.empty() && (body[0] == '+' || body[0] == '-'))
	{
		neg = body[0] == '-';
		body.remove_prefix(1);
	}
	auto slash = body.find('/');
	std::string_view num = body.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw Error(ErrorCode::MalformedNumber, "'" + std::string(text) + "'");
	mpz_class n{std::string(num)}, d{std::string(den)};
	if (d == 0)
		throw Error(ErrorCode::ZeroDenominator, "'" + std::string(text) + "'");
	if (neg)
		n = -n;
	return Rational(mpq_class(n, d));
}

std::string format_rational(const Rational &q) { return q.str(); }

const Rational &LambdaParam::value() const
{
	if (inf_)
		throw Error(ErrorCode::DomainMismatch, "lambda is infinite");
	return q_;
}

LambdaParam parse_lambda(std::string_view text)
{
	if (text == "inf" || text == "∞")
		return LambdaParam::infinity();
	return LambdaParam::finite(parse_rational(text));
}

} // namespace witt
