#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mopuc/cmat.hpp"
#include "mopuc/matpoly.hpp"
#include "mopuc/opuc.hpp"
#include "mopuc/recurrence.hpp"

namespace mopuc {

// A matrix is a row-major list of p*p entries, each entry a [re, im] pair.
nlohmann::json mat_to_json(const CMat& m);

// expected_dim = 0 accepts any square size, otherwise enforces it.
CMat mat_from_json(const nlohmann::json& j, int expected_dim = 0);

// {"p": dim, "deg": formal degree, "coeffs": [matrix, ...]}
nlohmann::json poly_to_json(const MatPoly& p);
MatPoly poly_from_json(const nlohmann::json& j);

// Full system dump for golden-file regression and reload.
nlohmann::json system_to_json(const OpucSystem& sys);
OpucSystem system_from_json(const nlohmann::json& j);

// {"p": dim, "H": [matrix, ...]} with H[k] holding H_{k+1}.
nlohmann::json sequence_to_json(const ReflectionSequence& seq);
ReflectionSequence sequence_from_json(const nlohmann::json& j);

// FNV-1a 64-bit over bytes; hex form is 16 lowercase digits.
std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

// Round-trip exact decimal form of a double (printf %.17g, C locale).
std::string format_double17(double x);

}  // namespace mopuc
