#pragma once

#include <stdexcept>
#include <string>

namespace meig {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct InvalidGraph : Error {
	using Error::Error;
};
struct NotConnected : Error {
	using Error::Error;
};
struct ChargeOutOfRange : Error {
	using Error::Error;
};
struct ZeroDegree : Error {
	using Error::Error;
};
struct DenseLimitExceeded : Error {
	using Error::Error;
};
struct NoConvergence : Error {
	NoConvergence(std::string msg, int k_achieved)
		: Error(std::move(msg)), k_achieved(k_achieved) {}
	int k_achieved;
};
struct ZeroVector : Error {
	using Error::Error;
};
struct IndexOutOfRange : Error {
	using Error::Error;
};
struct SubsetOutOfRange : Error {
	using Error::Error;
};
struct EmptySide : Error {
	using Error::Error;
};
struct LabelMismatch : Error {
	using Error::Error;
};
struct MissingSpectralGap : Error {
	using Error::Error;
};
struct ParamOutOfRange : Error {
	using Error::Error;
};
struct ConnectivityRetryExceeded : Error {
	using Error::Error;
};
struct ParseError : Error {
	using Error::Error;
};
struct MissingField : Error {
	using Error::Error;
};

} // namespace meig
