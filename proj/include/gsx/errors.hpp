#ifndef GSX_ERRORS_HPP
#define GSX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsx {

// Malformed or inconsistent user input (bad file, mixed fields, unknown
// generator, dimension mismatch).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold (e.g. irr() on a
// set that is not a Groebner-Shirshov basis).
class contract_error : public std::runtime_error {
public:
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// Extension construction refused: an extension condition does not vanish.
// Carries the composition that failed so callers can report it.
class construction_error : public std::runtime_error {
public:
    construction_error(const std::string& what, std::string composition)
        : std::runtime_error(what), composition_(std::move(composition)) {}

    const std::string& composition() const { return composition_; }

private:
    std::string composition_;
};

} // namespace gsx

#endif
