#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fmdil {

// Cayley-table validation failure. Carries the first violated axiom
// ("range", "identity", "inverses", "associativity", "row-permutation",
// "column-permutation") and the witness element indices.
class GroupValidationError : public std::runtime_error {
public:
    GroupValidationError(std::string axiom, std::vector<int> witness,
                         const std::string& message)
        : std::runtime_error(message),
          axiom_(std::move(axiom)),
          witness_(std::move(witness)) {}

    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

// Input file could not be parsed (distinct from a well-formed file that
// fails validation).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line = -1)
        : std::runtime_error(line >= 0 ? message + " (line " +
                                             std::to_string(line) + ")"
                                       : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Cocycle extraction produced residuals above the hard bound; the input
// symbol was mis-certified or the rank cut was too aggressive.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& message, double residual)
        : std::runtime_error(message), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

// Resolvent requested at a spectral value.
class PoleError : public std::invalid_argument {
public:
    PoleError(const std::string& message, int element)
        : std::invalid_argument(message), element_(element) {}

    int element() const { return element_; }

private:
    int element_;
};

// Contour quadrature failed to converge; carries the last two estimates.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& message, std::complex<double> coarse,
                    std::complex<double> refined)
        : std::runtime_error(message), coarse_(coarse), refined_(refined) {}

    std::complex<double> coarse() const { return coarse_; }
    std::complex<double> refined() const { return refined_; }

private:
    std::complex<double> coarse_;
    std::complex<double> refined_;
};

}  // namespace fmdil
