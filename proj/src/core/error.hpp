#pragma once

#include <stdexcept>
#include <string>

namespace clashfree {

enum class ErrorKind {
    param,     // caller passed values outside a function's domain
    resource,  // instance exceeds a configured cap
    internal,  // a structural invariant failed to hold
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_param(const std::string& msg) { throw Error(ErrorKind::param, msg); }
[[noreturn]] inline void throw_resource(const std::string& msg) { throw Error(ErrorKind::resource, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

}  // namespace clashfree
