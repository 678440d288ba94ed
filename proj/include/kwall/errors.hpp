#pragma once

#include <stdexcept>
#include <string>

namespace kwall {

// Every domain failure carries a short machine-readable kind so the CLI can
// map it to an exit code and tests can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) { throw Error(kind, what); }

}  // namespace kwall
