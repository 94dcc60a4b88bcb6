#pragma once

#include <stdexcept>
#include <string>

namespace starcol {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- tree construction -------------------------------------------------
struct SelfLoop : Error {
    explicit SelfLoop(const std::string& w) : Error(w) {}
};
struct DuplicateEdge : Error {
    explicit DuplicateEdge(const std::string& w) : Error(w) {}
};
struct CycleDetected : Error {
    explicit CycleDetected(const std::string& w) : Error(w) {}
};
struct Disconnected : Error {
    explicit Disconnected(const std::string& w) : Error(w) {}
};
struct InvalidVertex : Error {
    explicit InvalidVertex(const std::string& w) : Error(w) {}
};

// --- domain/shape violations -------------------------------------------
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(w) {}
};
struct ProfileShapeError : Error {
    explicit ProfileShapeError(const std::string& w) : Error(w) {}
};
struct ProfileMismatch : Error {
    explicit ProfileMismatch(const std::string& w) : Error(w) {}
};
struct NotStarColoring : Error {
    explicit NotStarColoring(const std::string& w) : Error(w) {}
};
struct NotCaterpillar : Error {
    explicit NotCaterpillar(const std::string& w) : Error(w) {}
};
struct CoverageMismatch : Error {
    explicit CoverageMismatch(const std::string& w) : Error(w) {}
};

// --- guards and plumbing -----------------------------------------------
struct TooLarge : Error {
    explicit TooLarge(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

// Raised when an internal guarantee is violated (a bug, not bad input).
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(w) {}
};

}  // namespace starcol
