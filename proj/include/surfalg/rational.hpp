#ifndef SURFALG_RATIONAL_HPP
#define SURFALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace surfalg {

using Rational = mpq_class;

// Parses "3", "-4/6" (reduced on the way in). Throws DomainError on junk.
Rational parse_rational(const std::string& text);

// Canonical form: "num" or "num/den" with positive denominator.
std::string rational_str(const Rational& q);

}  // namespace surfalg

#endif
