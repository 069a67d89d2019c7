#pragma once

#include <stdexcept>
#include <string>

namespace mof {

struct NegativeDiscriminant : std::domain_error {
    explicit NegativeDiscriminant(const std::string& msg) : std::domain_error(msg) {}
};

struct PositiveD : std::domain_error {
    explicit PositiveD(const std::string& msg) : std::domain_error(msg) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct SizeLimit : std::length_error {
    explicit SizeLimit(const std::string& msg) : std::length_error(msg) {}
};

struct DegenerateEigenbasis : std::runtime_error {
    explicit DegenerateEigenbasis(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonRealResponse : std::runtime_error {
    explicit NonRealResponse(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyFeasibleGrid : std::runtime_error {
    explicit EmptyFeasibleGrid(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mof
