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

#include "coexsim/context.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "coexsim/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace coexsim {

using nlohmann::json;

std::string_view to_string(WeatherCondition c) {
  return c == WeatherCondition::kRainy ? "rainy" : "sunny";
}

double select_interference_threshold(const WeatherContext& w,
                                     const ThresholdPolicy& policy) {
  if (policy.override_db) return *policy.override_db;
  return w.condition == WeatherCondition::kRainy ? policy.rainy_db : policy.sunny_db;
}

WeatherContext make_weather(double rain_rate_mm_h, std::int64_t timestamp,
                            const ThresholdPolicy& policy) {
  if (!(rain_rate_mm_h >= 0.0) || !std::isfinite(rain_rate_mm_h)) {
    throw ValidationError("rain.1h", "rain rate must be a finite value >= 0");
  }
  WeatherContext w;
  w.condition = rain_rate_mm_h > 0.0 ? WeatherCondition::kRainy : WeatherCondition::kSunny;
  w.rain_rate_mm_h = rain_rate_mm_h;
  w.timestamp = timestamp;
  w.i_th_db = select_interference_threshold(w, policy);
  return w;
}

WeatherContext load_weather_snapshot(std::string_view document,
                                     const ThresholdPolicy& policy) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("weather snapshot: ") + e.what(), e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("weather snapshot: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ValidationError("<root>", "snapshot must be a JSON object");

  std::string condition;
  if (auto it = doc.find("condition"); it != doc.end()) {
    if (!it->is_string()) throw ValidationError("condition", "must be a string");
    condition = it->get<std::string>();
  }

  std::optional<double> rain;
  if (auto it = doc.find("rain"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("rain", "must be an object");
    if (auto h = it->find("1h"); h != it->end()) {
      if (!h->is_number()) throw ValidationError("rain.1h", "must be a number");
      rain = h->get<double>();
    }
  }
  if (!rain && condition == "Rain") {
    throw ValidationError("rain.1h", "required when condition is \"Rain\"");
  }
  const double rate = rain.value_or(0.0);
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw ValidationError("rain.1h", "rain rate must be a finite value >= 0");
  }

  std::int64_t dt = 0;
  if (auto it = doc.find("dt"); it != doc.end()) {
    if (!it->is_number_integer()) throw ValidationError("dt", "must be an integer");
    dt = it->get<std::int64_t>();
  }
  return make_weather(rate, dt, policy);
}

ReplayWeatherProvider::ReplayWeatherProvider(std::vector<std::string> documents)
    : documents_(std::move(documents)) {
  if (documents_.empty()) throw std::invalid_argument("ReplayWeatherProvider: no documents");
}

std::string ReplayWeatherProvider::fetch_document() {
  std::string doc = documents_[next_];
  next_ = (next_ + 1) % documents_.size();
  return doc;
}

HttpWeatherProvider::HttpWeatherProvider(std::string host, int port, std::string path)
    : host_(std::move(host)), port_(port), path_(std::move(path)) {}

std::string HttpWeatherProvider::fetch_document() {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(5);
  auto res = client.Get(path_);
  if (!res) {
    throw std::runtime_error("weather endpoint unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw std::runtime_error("weather endpoint returned HTTP " + std::to_string(res->status));
  }
  return res->body;
}

WeatherContext load_weather_file(const std::string& path, const ThresholdPolicy& policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open weather snapshot " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_weather_snapshot(ss.str(), policy);
}

}  // namespace coexsim
