#pragma once

#include <stdexcept>
#include <string>

namespace jetinv {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularCayley : Error {
    explicit SingularCayley(const std::string& what) : Error(what) {}
};

struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& what) : Error(what) {}
};

struct OrderTooLow : Error {
    explicit OrderTooLow(const std::string& what) : Error(what) {}
};

struct SingularGram : Error {
    explicit SingularGram(const std::string& what) : Error(what) {}
};

struct DependentBasis : Error {
    explicit DependentBasis(const std::string& what) : Error(what) {}
};

struct DegenerateFrame : Error {
    explicit DegenerateFrame(const std::string& what) : Error(what) {}
};

struct PoleHit : Error {
    explicit PoleHit(const std::string& what) : Error(what) {}
};

struct BadConfig : Error {
    explicit BadConfig(const std::string& what) : Error(what) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

} // namespace jetinv
