#pragma once

#include <stdexcept>
#include <string>

namespace cbasis {

// Argument outside the mathematical domain of an operation (inadmissible
// index, negative wavenumber, order cap exceeded, ...).
class domain_error : public std::domain_error {
  public:
    explicit domain_error(std::string const& what) : std::domain_error(what) {}
};

// Caller broke an interface contract, e.g. spectra sampled on a grid that is
// not the quadrature rule they are integrated with.
class contract_violation : public std::logic_error {
  public:
    explicit contract_violation(std::string const& what) : std::logic_error(what) {}
};

} // namespace cbasis
