// Copyright 2026 The gridxai Authors.
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

#include "gridxai/ingest/xml_document.h"

#include <expat.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <type_traits>
#include <map>
#include <memory>

#include "gridxai/common/csv.h"
#include "gridxai/common/error.h"

namespace gridxai::ingest {
namespace {

std::string_view LocalName(const XML_Char* name) {
  std::string_view n(name);
  const auto colon = n.rfind(':');
  return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

std::chrono::minutes ParseResolution(const std::string& text) {
  // PT15M, PT30M, PT60M, PT1H
  if (text.size() < 4 || text.rfind("PT", 0) != 0) {
    throw ParseError("unsupported resolution '" + text + "'");
  }
  int value = 0;
  const char* first = text.data() + 2;
  const char* last = text.data() + text.size() - 1;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value <= 0) {
    throw ParseError("unsupported resolution '" + text + "'");
  }
  if (text.back() == 'M') return std::chrono::minutes(value);
  if (text.back() == 'H') return std::chrono::minutes(60 * value);
  throw ParseError("unsupported resolution '" + text + "'");
}

UtcTime ParseInstant(const std::string& text) {
  try {
    return ParseIso(text);
  } catch (const Error&) {
    throw ParseError("invalid timestamp '" + text + "'");
  }
}

class Handler {
 public:
  explicit Handler(XML_Parser parser) : parser_(parser) {}

  MarketDocument Take() { return std::move(doc_); }

  void Start(const XML_Char* raw_name) {
    const std::string_view name = LocalName(raw_name);
    if (stack_.empty()) {
      if (name == "Acknowledgement_MarketDocument") {
        doc_.acknowledgement = true;
      } else if (!name.ends_with("MarketDocument")) {
        Fail("unexpected document element '" + std::string(name) + "'");
      }
    }
    stack_.emplace_back(name);
    text_.clear();
    if (name == "TimeSeries") {
      curve_type_ = "A01";
    } else if (name == "Period") {
      doc_.periods.emplace_back();
      doc_.periods.back().curve_type = curve_type_;
      in_period_ = true;
    } else if (name == "Point") {
      position_ = -1;
      has_value_ = false;
    }
  }

  void End() {
    const std::string name = stack_.back();
    stack_.pop_back();
    const std::string parent = stack_.empty() ? "" : stack_.back();
    const std::string text = Trim(text_);
    text_.clear();

    if (name == "curveType") {
      curve_type_ = text;
    } else if (name == "quantity_Measure_Unit.name") {
      if (text == "MAW") {
        doc_.unit = "MW";
      } else {
        Fail("unsupported unit '" + text + "'");
      }
    } else if (name == "price_Measure_Unit.name") {
      if (text != "MWH") Fail("unsupported price unit '" + text + "'");
      doc_.unit = "EUR/MWh";
    } else if (name == "currency_Unit.name") {
      if (text != "EUR") Fail("unsupported currency '" + text + "'");
    } else if (name == "code" && parent == "Reason") {
      doc_.reason_code = text;
    } else if (name == "text" && parent == "Reason") {
      doc_.reason_text = text;
    } else if (in_period_ && parent == "timeInterval" &&
               (name == "start" || name == "end")) {
      Period& p = doc_.periods.back();
      (name == "start" ? p.start : p.end) = Guard([&] { return ParseInstant(text); });
    } else if (in_period_ && name == "resolution") {
      doc_.periods.back().resolution =
          Guard([&] { return ParseResolution(text); });
    } else if (name == "position" && parent == "Point") {
      int pos = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), pos);
      if (ec != std::errc() || ptr != text.data() + text.size() || pos < 1) {
        Fail("invalid point position '" + text + "'");
      }
      position_ = pos;
    } else if ((name == "quantity" || name == "price.amount") &&
               parent == "Point") {
      value_ = Guard([&] {
        const double v = ParseDouble(text);
        if (text.empty()) throw ParseError("empty point value");
        return v;
      });
      has_value_ = true;
    } else if (name == "Point") {
      if (!in_period_) Fail("point outside a period");
      if (position_ < 1 || !has_value_) Fail("point without position or value");
      doc_.periods.back().points.emplace_back(position_, value_);
    } else if (name == "Period") {
      const Period& p = doc_.periods.back();
      if (!(p.end > p.start)) Fail("period without a valid time interval");
      in_period_ = false;
    }
  }

  void Text(const XML_Char* s, int len) { text_.append(s, static_cast<std::size_t>(len)); }

 private:
  [[noreturn]] void Fail(const std::string& message) {
    throw ParseError(message, XML_GetCurrentByteIndex(parser_));
  }

  template <typename F>
  std::invoke_result_t<F> Guard(F f) {
    try {
      return f();
    } catch (const ParseError& e) {
      Fail(e.what());
    }
  }

  XML_Parser parser_;
  MarketDocument doc_;
  std::vector<std::string> stack_;
  std::string text_;
  std::string curve_type_ = "A01";
  bool in_period_ = false;
  int position_ = -1;
  double value_ = 0.0;
  bool has_value_ = false;
};

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

struct Context {
  Handler* handler;
  std::exception_ptr error;
  XML_Parser parser;
};

void OnStart(void* data, const XML_Char* name, const XML_Char**) {
  auto* ctx = static_cast<Context*>(data);
  try {
    ctx->handler->Start(name);
  } catch (...) {
    ctx->error = std::current_exception();
    XML_StopParser(ctx->parser, XML_FALSE);
  }
}

void OnEnd(void* data, const XML_Char*) {
  auto* ctx = static_cast<Context*>(data);
  try {
    ctx->handler->End();
  } catch (...) {
    ctx->error = std::current_exception();
    XML_StopParser(ctx->parser, XML_FALSE);
  }
}

void OnText(void* data, const XML_Char* s, int len) {
  static_cast<Context*>(data)->handler->Text(s, len);
}

}  // namespace

MarketDocument ParseMarketDocument(std::string_view xml) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreate(nullptr));
  if (!parser) throw Error(ErrorKind::kCapacity, "cannot allocate XML parser");
  Handler handler(parser.get());
  Context ctx{&handler, nullptr, parser.get()};
  XML_SetUserData(parser.get(), &ctx);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);
  const auto status = XML_Parse(parser.get(), xml.data(),
                                static_cast<int>(xml.size()), XML_TRUE);
  if (ctx.error) std::rethrow_exception(ctx.error);
  if (status != XML_STATUS_OK) {
    const auto offset = XML_GetCurrentByteIndex(parser.get());
    throw ParseError(std::string("malformed XML: ") +
                         XML_ErrorString(XML_GetErrorCode(parser.get())) +
                         " at byte " + std::to_string(offset),
                     offset);
  }
  return handler.Take();
}

std::vector<SeriesPoint> ToHourlyPoints(const MarketDocument& doc,
                                        const TimeWindow& clip) {
  std::map<UtcHour, double> merged;
  for (const auto& period : doc.periods) {
    const auto res = period.resolution;
    if (res.count() <= 0 || res.count() > 60 || 60 % res.count() != 0) {
      throw ParseError("resolution of " + std::to_string(res.count()) +
                       " minutes cannot be aggregated to hours");
    }
    const auto slots = (period.end - period.start) / res;
    std::vector<double> values(static_cast<std::size_t>(slots),
                               std::numeric_limits<double>::quiet_NaN());
    for (const auto& [pos, v] : period.points) {
      if (pos <= slots) values[static_cast<std::size_t>(pos - 1)] = v;
    }
    if (period.curve_type == "A03") {
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (std::isnan(values[i])) values[i] = values[i - 1];
      }
    }
    std::map<UtcHour, std::pair<double, int>> hourly;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (std::isnan(values[i])) continue;
      const UtcTime t = period.start + res * static_cast<long>(i);
      auto& [sum, n] = hourly[FloorHour(t)];
      sum += values[i];
      ++n;
    }
    for (const auto& [hour, acc] : hourly) {
      if (UtcTime(hour) < clip.start || !(UtcTime(hour) < clip.end)) continue;
      merged.emplace(hour, acc.first / acc.second);
    }
  }
  std::vector<SeriesPoint> out;
  out.reserve(merged.size());
  for (const auto& [hour, v] : merged) out.push_back({hour, v});
  return out;
}

}  // namespace gridxai::ingest
