#pragma once

#include <cstdint>
#include <string>

#include "ftsreg/experiments.hpp"
#include "ftsreg/filter.hpp"
#include "ftsreg/operators.hpp"
#include "ftsreg/simulate.hpp"
#include "ftsreg/spectral.hpp"

namespace ftsreg {

//! {"m": int, "action_re": [[...]], "action_im": [[...]]}
//! `action` is the stored action matrix; kernel values are m * action.
std::string to_json(const LinOp& op);
LinOp linop_from_json(const std::string& text);

//! {"m": int, "re": [...], "im": [...]}
std::string to_json(const GridFunc& f);
GridFunc gridfunc_from_json(const std::string& text);

//! {"L": int, "lags": [...], "ops": [...], "imag_mass": float}
std::string to_json(const FilterBank& bank);
FilterBank filterbank_from_json(const std::string& text);

//! {"bandwidth": float, "kind": "auto"|"cross", "ops": [...]}
std::string to_json(const SpectralCurve& curve);
SpectralCurve curve_from_json(const std::string& text);

std::string to_json(const ProcessSpec& spec);
//! Missing fields take their defaults; unknown keys are ignored.
ProcessSpec process_spec_from_json(const std::string& text);

std::string to_json(const StudyConfig& cfg);
StudyConfig study_config_from_json(const std::string& text);

std::string emit_study_json(const StudyResult& result);
std::string emit_study_svg(const StudyResult& result);

//! FNV-1a 64-bit digest, hex encoded; used for output manifests.
std::string fnv1a_hex(const std::string& bytes);

} // namespace ftsreg
