#pragma once

#include <stdexcept>
#include <string>

namespace mk {

enum class ErrorKind {
    Parse,       // malformed input text
    Domain,      // precondition violated by caller data
    WorkLimit,   // computation exceeded the configured work limit
    Internal,    // invariant broken inside the library (a bug)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }
[[noreturn]] inline void fail_domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
[[noreturn]] inline void fail_work_limit(const std::string& msg) { throw Error(ErrorKind::WorkLimit, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

}  // namespace mk
