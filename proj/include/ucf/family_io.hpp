#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ucf/family.hpp"

namespace ucf {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Family text format:
///   - one set per line, elements as base-10 positive integers separated by
///     spaces and/or commas; the empty set is the single token "-"
///   - an optional header "n=<int>" before the first set line declares the
///     ground size; without it, n is the largest element seen
///   - lines starting with "#" are comments; blank lines are ignored
///   - a set appearing twice is an error
SetFamily parse_family(const std::string& text);

SetFamily parse_family_file(const std::filesystem::path& path);

/// Prints the "n=" header plus one line per member (ascending mask order).
/// The output re-parses to an equal family.
std::string to_text(const SetFamily& f);

}  // namespace ucf
