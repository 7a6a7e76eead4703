#ifndef TOREXT_ERRORS_HPP
#define TOREXT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torext {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different coefficient fields") {}
};

struct RegistryMismatch : Error {
    explicit RegistryMismatch(const std::string& what = "operands belong to different variable registries")
        : Error(what) {}
};

// Parse errors carry a 0-based character offset into the input.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownVariable : Error {
    std::size_t position;
    std::string name;
    UnknownVariable(const std::string& var, std::size_t pos)
        : Error("unknown variable '" + var + "' at position " + std::to_string(pos)),
          position(pos),
          name(var) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& what = "operation undefined for the zero polynomial")
        : Error(what) {}
};

struct ZeroRelation : Error {
    ZeroRelation() : Error("presentation contains a zero relation") {}
};

struct ExponentOverflow : Error {
    ExponentOverflow() : Error("monomial exponent exceeds 2^16 bound") {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what) : Error("resource limit exceeded: " + what) {}
};

struct NotAHopfIdeal : Error {
    std::string check;
    std::string witness;
    NotAHopfIdeal(const std::string& check_, const std::string& witness_)
        : Error("relation ideal is not a Hopf ideal (check '" + check_ + "', witness " + witness_ + ")"),
          check(check_),
          witness(witness_) {}
};

struct NotEquivariant : Error {
    std::string witness;
    explicit NotEquivariant(const std::string& witness_)
        : Error("coaction does not preserve the relation ideal (witness " + witness_ + ")"),
          witness(witness_) {}
};

struct EmptyFiber : Error {
    EmptyFiber() : Error("fiber of the torsor at the distinguished point is empty") {}
};

struct CenterNotInSpecialFiber : Error {
    CenterNotInSpecialFiber() : Error("blow-up center does not contain the uniformizer") {}
};

struct SectionNotInSpecialFiber : Error {
    SectionNotInSpecialFiber() : Error("identity section is not consistent with the relations mod t") {}
};

struct CharacteristicMismatch : Error {
    explicit CharacteristicMismatch(const std::string& what) : Error(what) {}
};

struct NotPointed : Error {
    explicit NotPointed(const std::string& what = "distinguished point does not satisfy the relations")
        : Error(what) {}
};

struct CapExceeded : Error {
    std::string diagnostics;
    explicit CapExceeded(const std::string& diag)
        : Error("blow-up exponent cap exceeded without a certified model"), diagnostics(diag) {}
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace torext

#endif
