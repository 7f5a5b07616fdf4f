// Copyright 2026 The qmlearn Authors
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

#include "qmlearn/poly_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qmlearn/errors.hpp"

namespace qmlearn {

using nlohmann::json;

std::string poly_to_json(const MultilinearPoly &f) {
    const auto &ctx = f.field();
    json coeffs = json::array();
    for (const auto &[s, alpha] : f.coeffs()) {
        coeffs.push_back({{"S", s.members()}, {"alpha", alpha.value}});
    }
    json doc = {
        {"field", {{"p", ctx.p()}, {"r", ctx.r()}, {"modulus", ctx.modulus()}}},
        {"n", f.num_vars()},
        {"d", f.degree_bound()},
        {"coeffs", std::move(coeffs)},
    };
    return doc.dump();
}

MultilinearPoly poly_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        const auto &field = doc.at("field");
        FieldCtx ctx(field.at("p").get<std::uint32_t>(), field.at("r").get<std::uint32_t>(),
                     field.at("modulus").get<std::vector<std::uint32_t>>());
        const int n = doc.at("n").get<int>();
        const int d = doc.at("d").get<int>();
        if (n < 0 || n > SubsetIndex::kMaxVars || d < 0 || d > n) {
            throw Error(ErrorCode::ParseError, "need 0 <= d <= n <= 64");
        }
        MultilinearPoly f(ctx, n, d);
        std::set<std::uint64_t> seen;
        for (const auto &entry : doc.at("coeffs")) {
            const auto members = entry.at("S").get<std::vector<int>>();
            const auto alpha = entry.at("alpha").get<std::int64_t>();
            SubsetIndex s = SubsetIndex::from_members(members);
            if (s.max_member() > n) throw Error(ErrorCode::ParseError, "subset member exceeds n");
            if (s.size() > d) throw Error(ErrorCode::ParseError, "subset larger than d");
            if (!seen.insert(s.mask()).second) throw Error(ErrorCode::ParseError, "duplicate subset");
            if (alpha < 0 || alpha >= ctx.q()) throw Error(ErrorCode::ParseError, "alpha outside [0, q)");
            f.set(s, FieldElem{static_cast<std::uint32_t>(alpha)});
        }
        return f;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::IndexOutOfRange) throw Error(ErrorCode::ParseError, e.what());
        throw;
    }
}

MultilinearPoly load_poly(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return poly_from_json(buf.str());
}

void save_poly(const MultilinearPoly &f, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << poly_to_json(f) << '\n';
}

}  // namespace qmlearn
