// Copyright 2026 The coexsim Authors
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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coexsim {

enum class WeatherCondition { kSunny, kRainy };

std::string_view to_string(WeatherCondition c);

/// One frozen weather observation plus the protection threshold it implies.
/// Sunny ⇔ rain_rate_mm_h == 0.
struct WeatherContext {
  WeatherCondition condition = WeatherCondition::kSunny;
  double rain_rate_mm_h = 0.0;
  double i_th_db = -8.5;
  std::int64_t timestamp = 0;

  bool operator==(const WeatherContext&) const = default;
};

/// Interference-to-noise thresholds per condition; `override_db` wins when set.
struct ThresholdPolicy {
  double sunny_db = -8.5;
  double rainy_db = -12.0;
  std::optional<double> override_db;
};

double select_interference_threshold(const WeatherContext& w,
                                     const ThresholdPolicy& policy = {});

/// Parses a weather snapshot:
///
///   {"condition": "Rain", "rain": {"1h": 25.0}, "dt": 1700000000}
///
/// `condition` is optional and informational except that "Rain" requires a
/// rain.1h value. The context is rainy iff rain.1h > 0. Throws ParseError
/// (with byte offset) for malformed JSON and ValidationError for schema
/// violations.
WeatherContext load_weather_snapshot(std::string_view document,
                                     const ThresholdPolicy& policy = {});

/// Builds a context directly (for presets and tests).
WeatherContext make_weather(double rain_rate_mm_h, std::int64_t timestamp = 0,
                            const ThresholdPolicy& policy = {});

/// Source of weather snapshots. Every provider yields documents in the
/// snapshot schema and goes through load_weather_snapshot.
class WeatherProvider {
 public:
  virtual ~WeatherProvider() = default;
  virtual std::string fetch_document() = 0;

  WeatherContext fetch(const ThresholdPolicy& policy = {}) {
    return load_weather_snapshot(fetch_document(), policy);
  }
};

/// Replays recorded snapshot documents in order, wrapping around.
class ReplayWeatherProvider : public WeatherProvider {
 public:
  explicit ReplayWeatherProvider(std::vector<std::string> documents);
  std::string fetch_document() override;

 private:
  std::vector<std::string> documents_;
  std::size_t next_ = 0;
};

/// HTTP GET adapter: `http://host:port/path` returning a snapshot document.
class HttpWeatherProvider : public WeatherProvider {
 public:
  HttpWeatherProvider(std::string host, int port, std::string path);
  std::string fetch_document() override;

 private:
  std::string host_;
  int port_;
  std::string path_;
};

/// Reads a snapshot file from disk.
WeatherContext load_weather_file(const std::string& path,
                                 const ThresholdPolicy& policy = {});

}  // namespace coexsim
