// Copyright 2026 The cmzv Authors
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

#ifndef CMZV_INDEX_HPP
#define CMZV_INDEX_HPP

// Indices (s_1, ..., s_d) of positive integers and sets of them. Text syntax:
// commas inside an index, semicolons between indices ("1,2;3").

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmzv
{

using Index = std::vector<int>;
using IndexSet = std::vector<Index>;

inline int weight(const Index &s) { return std::accumulate(s.begin(), s.end(), 0); }
inline int depth(const Index &s) { return static_cast<int>(s.size()); }

/// s_i + ... + s_d for 0-based i (0 when i == d).
inline int tail_weight(const Index &s, std::size_t i)
{
    return std::accumulate(s.begin() + static_cast<std::ptrdiff_t>(std::min(i, s.size())), s.end(), 0);
}

inline Index window(const Index &s, std::size_t i, std::size_t j)
{
    return Index(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(j));
}

inline std::string to_string(const Index &s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out;
}

inline std::string to_string(const IndexSet &I)
{
    std::string out;
    for (std::size_t i = 0; i < I.size(); ++i) {
        out += (i ? ";" : "") + to_string(I[i]);
    }
    return out;
}

inline Index parse_index(const std::string &text)
{
    Index s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("index entry '" + item + "' is not an integer");
        }
        if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) {
            throw std::invalid_argument("index entry '" + item + "' is not an integer");
        }
        if (v < 1) {
            throw std::invalid_argument("index entries must be positive (got " + item + ")");
        }
        s.push_back(v);
    }
    if (s.empty()) {
        throw std::invalid_argument("empty index");
    }
    return s;
}

inline IndexSet parse_index_set(const std::string &text)
{
    IndexSet I;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        I.push_back(parse_index(item));
    }
    if (I.empty()) {
        throw std::invalid_argument("empty index set");
    }
    return I;
}

/// Depth first, then lexicographic.
/// Every index of weight <= wmax and depth <= dmax, in depth-first order:
/// (1), (1,1), (1,1,1), ..., (2), (2,1), ...
inline IndexSet indices_up_to(int wmax, int dmax)
{
    IndexSet out;
    Index cur;
    auto rec = [&](auto &self, int left) -> void {
        if (!cur.empty()) {
            out.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == dmax) {
            return;
        }
        for (int v = 1; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, wmax);
    return out;
}

inline bool index_less(const Index &a, const Index &b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

/// Smallest set containing every contiguous window of every member, listed
/// in depth-ascending lexicographic order.
inline IndexSet index_subclosure(const IndexSet &I)
{
    std::set<Index, decltype(&index_less)> out(&index_less);
    for (const auto &s : I) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j <= s.size(); ++j) {
                out.insert(window(s, i, j));
            }
        }
    }
    return IndexSet(out.begin(), out.end());
}

inline bool is_subclosed(const IndexSet &I)
{
    const auto c = index_subclosure(I);
    return std::all_of(c.begin(), c.end(),
                       [&](const Index &w) { return std::find(I.begin(), I.end(), w) != I.end(); });
}

} // namespace cmzv

#endif
