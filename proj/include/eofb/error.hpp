// Copyright 2026 The eofb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace eofb {

/// Failure categories raised by the library. Every eofb::Error carries one,
/// so callers can branch on the condition instead of parsing messages.
enum class Errc {
    non_finite,
    singular,
    negative_block_determinant,
    complex_root,
    unphysical,
    not_symplectic,
    not_local,
    invalid_angle,
    not_symmetric,
    negative_radicand,
    not_entangled,
    domain_error,
    division_by_zero,
    exhausted_rejection,
    parse_error,
};

inline const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::non_finite: return "non_finite";
    case Errc::singular: return "singular";
    case Errc::negative_block_determinant: return "negative_block_determinant";
    case Errc::complex_root: return "complex_root";
    case Errc::unphysical: return "unphysical";
    case Errc::not_symplectic: return "not_symplectic";
    case Errc::not_local: return "not_local";
    case Errc::invalid_angle: return "invalid_angle";
    case Errc::not_symmetric: return "not_symmetric";
    case Errc::negative_radicand: return "negative_radicand";
    case Errc::not_entangled: return "not_entangled";
    case Errc::domain_error: return "domain_error";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::exhausted_rejection: return "exhausted_rejection";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace eofb
