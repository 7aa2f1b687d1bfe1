// Copyright 2026 The Geobehave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "geobehave/calendar.hpp"
#include "geobehave/indicators.hpp"
#include "geobehave/mobility.hpp"
#include "geobehave/quality.hpp"
#include "geobehave/time.hpp"

namespace geobehave {

struct DerivedConfig {
  // "After school" runs from the calendar's school end to this local time.
  int after_school_end_min = 22 * 60;
  int min_window_days = 7;
  TNorm norm = TNorm::kMinimum;
};

struct OmittedIndicator {
  std::string participant;
  std::string indicator;
  std::string reason;

  nlohmann::json to_json() const;
};

struct DerivedResult {
  std::vector<IndicatorValue> values;
  std::vector<OmittedIndicator> omitted;
};

/// Derived indicators of one participant over local days [first, first + days).
/// `base` holds that participant's base and self-reported values, `timelines`
/// their daily timelines; record order does not matter. Values whose inputs
/// are missing in the window are omitted with a reason.
DerivedResult derive_indicators(std::span<const IndicatorValue> base, std::span<const Timeline> timelines,
                                const std::string& participant, Date first, int days, const LocalClock& clock,
                                const SchoolCalendar* calendar, const DerivedConfig& config = {});

/// Per-minute transport mode of every move; quality is the move's mode
/// quality bounded by `quality`.
std::vector<IndicatorValue> transport_mode_values(std::span<const Timeline> timelines, const LocalClock& clock,
                                                  const QualityFn& quality = {});

/// Rebuilds the per-minute annotations timelines need from persisted values.
MinuteIndicators minute_indicators(std::span<const IndicatorValue> values);

}  // namespace geobehave
