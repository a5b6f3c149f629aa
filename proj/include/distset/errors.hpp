#ifndef DISTSET_ERRORS_HPP
#define DISTSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distset {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& w) : Error(w) {}
};
struct BadAlphabet : Error {
    explicit BadAlphabet(const std::string& w) : Error(w) {}
};
struct OrderTooLarge : Error {
    explicit OrderTooLarge(const std::string& w) : Error(w) {}
};
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& w) : Error(w) {}
};
struct BadSize : Error {
    explicit BadSize(const std::string& w) : Error(w) {}
};
struct NotTwoDistanceGraph : Error {
    explicit NotTwoDistanceGraph(const std::string& w) : Error(w) {}
};
struct PositiveDimensionalUnexpected : Error {
    explicit PositiveDimensionalUnexpected(const std::string& w) : Error(w) {}
};
struct RankMismatch : Error {
    explicit RankMismatch(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};
struct CertificationFailure : Error {
    explicit CertificationFailure(const std::string& w) : Error(w) {}
};

} // namespace distset

#endif
