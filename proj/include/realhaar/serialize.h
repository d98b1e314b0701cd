// Copyright 2026 The realhaar Authors
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

#ifndef REALHAAR_SERIALIZE_H
#define REALHAAR_SERIALIZE_H

#include <json.hpp>
#include <ostream>
#include <string>

#include "realhaar/applications.h"
#include "realhaar/distances.h"
#include "realhaar/harmonic.h"
#include "realhaar/moments.h"
#include "realhaar/spectra.h"

namespace realhaar {

/// Key order is insertion order, so equal values always dump to equal bytes.
using Json = nlohmann::ordered_json;

/// ["num", "den"] in lowest terms. Strings keep arbitrarily large values intact.
Json rat_json(const Rat &r);
Rat rat_from_json(const Json &j);

Json to_json(const RealHaarSpectrum &s);
Json to_json(const EnsembleSpectrum &s, const char *ensemble);
Json to_json(const RatMatrix &m);
Json to_json(const Poly &p);
Json to_json(const SymVector &v);
Json to_json(const DistanceReport &r);
Json to_json(const BoundReport &r);

/// "p" as a number, or the string "inf".
Json order_json(double p);

/// Row-major long format with header "row,col,value" (plus ",imag" for complex estimates).
void write_csv(std::ostream &out, const FloatMatrix &m);

/// Header of the scan CSV.
inline constexpr const char *kScanCsvHeader = "d,t,p,exact_num,exact_den,float,method,regime";
std::string scan_csv_row(const DistanceReport &r);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

}  // namespace realhaar

#endif
