#pragma once

#include <stdexcept>
#include <string>

namespace lamlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPath : Error {
    InvalidPath() : Error("path does not address a subterm") {}
};

struct NotAnAbstraction : Error {
    NotAnAbstraction() : Error("subterm at path is not an abstraction") {}
};

struct SideConditionViolated : Error {
    explicit SideConditionViolated(const std::string& what) : Error(what) {}
};

struct NotARedex : Error {
    NotARedex() : Error("subterm at path is not a redex") {}
};

struct ConventionViolated : Error {
    explicit ConventionViolated(const std::string& what) : Error(what) {}
};

struct RuleMismatch : Error {
    explicit RuleMismatch(const std::string& what) : Error(what) {}
};

struct NotPure : Error {
    NotPure() : Error("term contains closures, updatings or metavariables") {}
};

struct CapExceeded : Error {
    CapExceeded() : Error("search exceeded the node cap") {}
};

struct InvalidTrace : Error {
    explicit InvalidTrace(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
};

struct ZeroIndex : ParseError {
    explicit ZeroIndex(std::size_t pos) : ParseError("de Bruijn indices start at 1", pos) {}
};

}  // namespace lamlab
