#pragma once

#include <stdexcept>
#include <string>

namespace lossindex {

// Error taxonomy mirrors the CLI exit codes: config=1, data=2,
// estimation=3, pricing=4, risk=5.

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

class estimation_error : public std::runtime_error {
public:
    explicit estimation_error(const std::string& what) : std::runtime_error(what) {}
};

class pricing_error : public std::runtime_error {
public:
    explicit pricing_error(const std::string& what) : std::runtime_error(what) {}
};

class risk_error : public std::runtime_error {
public:
    explicit risk_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lossindex
