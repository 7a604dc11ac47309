#pragma once

#include <stdexcept>
#include <string>

namespace etainv {

// Pole of a special function or eta component hit exactly.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Series truncation budget exhausted before the tail bound was met.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature could not meet the requested tolerance.
struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// Least-squares / continuation diagnostics out of bounds.
struct fit_error : std::runtime_error {
    explicit fit_error(const std::string& what) : std::runtime_error(what) {}
};

// Config parsing/validation failure; `field` names the offending entry.
struct config_error : std::runtime_error {
    std::string field;
    config_error(const std::string& field_, const std::string& what)
        : std::runtime_error(what), field(field_) {}
};

}  // namespace etainv
