#ifndef BIRAT_ERRORS_HPP
#define BIRAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace birat {

// Caller misuse: dimension mismatches, bad arguments, malformed configs.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input file / parse problems.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Term-budget or memory blowups during symbolic work. Carries whatever
// partial degree data was computed before the cap was hit.
class resource_error : public std::runtime_error {
public:
    resource_error(const std::string& what, std::vector<long long> partial_degrees = {})
        : std::runtime_error(what), partial(std::move(partial_degrees)) {}
    std::vector<long long> partial;
};

// Too many samples were rejected/dropped for a statistical verdict.
class insufficiency_error : public std::runtime_error {
public:
    explicit insufficiency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace birat

#endif
