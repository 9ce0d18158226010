#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bettiforge {

/// Thrown when a computation is refused for size reasons (oracle vertex cap,
/// dense-matrix column cap). The CLI maps this to exit code 2.
class computation_refused : public std::runtime_error {
public:
    explicit computation_refused(const std::string& what) : std::runtime_error(what) {}
};

/// Graph-spec syntax error, carrying the 0-based character position.
class spec_parse_error : public std::runtime_error {
public:
    spec_parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace bettiforge
