#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "meig/errors.hpp"

namespace meig {

/// Charge parameter g = num/den, kept as an exact rational in [0, 1/2].
/// Keeping it rational makes flux-triviality checks exact: e^{i 2 pi g a}
/// is +-1 or a true root of unity depending on (num*a) mod den.
class Charge {
public:
	Charge() : num_(0), den_(1) {}

	Charge(long num, long den) {
		if (den <= 0)
			throw ChargeOutOfRange("charge denominator must be positive");
		if (num < 0 || 2 * num > den)
			throw ChargeOutOfRange("charge must lie in [0, 1/2], got " +
								   std::to_string(num) + "/" + std::to_string(den));
		const long g = std::gcd(num, den);
		num_ = num / g;
		den_ = den / g;
	}

	/// Parses "k/m" or a bare integer ("0").
	static Charge parse(const std::string& s) {
		const auto slash = s.find('/');
		try {
			if (slash == std::string::npos)
				return Charge(std::stol(s), 1);
			return Charge(std::stol(s.substr(0, slash)),
						  std::stol(s.substr(slash + 1)));
		} catch (const std::invalid_argument&) {
			throw ChargeOutOfRange("cannot parse charge '" + s + "'");
		} catch (const std::out_of_range&) {
			throw ChargeOutOfRange("cannot parse charge '" + s + "'");
		}
	}

	long num() const { return num_; }
	long den() const { return den_; }
	double value() const { return double(num_) / double(den_); }
	bool is_zero() const { return num_ == 0; }

	/// e^{i 2 pi g a} for an integer flux a, exact at the rational points
	/// that matter (multiples of 1/2 turn).
	std::complex<double> unit_phase(long a) const {
		long r = (num_ * a) % den_;
		if (r < 0) r += den_;
		if (r == 0) return {1.0, 0.0};
		if (2 * r == den_) return {-1.0, 0.0};
		const double ang = 2.0 * M_PI * double(r) / double(den_);
		return {std::cos(ang), std::sin(ang)};
	}

	/// 2 pi g a as an angle.
	double angle(long a) const {
		return 2.0 * M_PI * double(num_) * double(a) / double(den_);
	}

	/// True iff g * flux is an integer, i.e. the holonomy e^{i 2 pi g flux} = 1.
	bool trivial_flux(long flux) const { return (num_ * flux) % den_ == 0; }

	std::string str() const {
		if (den_ == 1) return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

	friend bool operator==(const Charge& a, const Charge& b) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}

private:
	long num_, den_;
};

} // namespace meig
