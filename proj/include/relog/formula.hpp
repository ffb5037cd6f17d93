#pragma once

#include <stdexcept>
#include <string>

#include "relog/regress.hpp"

namespace relog {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, size_t position)
        : std::runtime_error(msg), position(position) {}
    size_t position;
};

// Model mini-language:
//   model := term "~" term ("+" term)*
//   term  := name | func "(" name ["," "p" "=" number] ")"
//   func  := "log" | "log1p" | "asinh" | "identity"
// log/log1p without p= use the natural base; asinh and identity take no p.
ModelSpec parse_model(const std::string& text);

}  // namespace relog
