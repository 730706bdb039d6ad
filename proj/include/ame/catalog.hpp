// Copyright 2026 The amecodes Authors
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

#include <string>
#include <vector>

#include "ame/json_io.hpp"

namespace ame {

/// Three-representation element table (coefficient tuple, polynomial, spin
/// level) of a field.
std::string render_field_table(const Field& f);

std::string render_singleton_array(const SingletonArray& sa);
std::string render_singleton_array_latex(const SingletonArray& sa);

std::string render_mds_text(const GeneratorMatrix& g, const Mat& h, bool mds, int d);
std::string render_mds_latex(const GeneratorMatrix& g, const Mat& h);

/// The Singleton arrays for q = 2, 3, 4, 5, 7, 8, 9, 11 (the q = 4 entry is
/// the extended array), with modulus, primitive element and, for extension
/// fields, the polynomial values of the a_i.
std::string singleton_arrays_catalog(FieldConvention conv);

/// One row of the code catalog: an [[n,1,d]]_q family with its logical
/// operator and the prime local dimensions it is certified for. The listed
/// operator is stated for the smallest q of the row with the first (smallest)
/// primitive element.
struct CatalogRow {
    int n;
    int expected_d;
    std::string m_text;
    std::vector<int> q_list;
};

const std::vector<CatalogRow>& code_catalog_rows();

struct CatalogResult {
    int n = 0;
    int q = 0;
    int expected_d = 0;
    int listed_m_weight = 0;   // minimal class weight of the listed operator
    bool used_search = false;  // listed operator compresses below expected_d;
                               // an equivalent was found by search
    std::string m_text;        // the operator actually certified
    int min_weight = 0;
    int certified_d = 0;
    bool ok = false;  // min_weight == certified_d == expected_d
};

/// Rebuilds and certifies every catalog entry with the first primitive
/// element (the convention the table is stated in): measures the minimal
/// class weight of the listed logical operator, falls back to a searched
/// equivalent when that operator only attains the expected weight at the
/// row's smallest q, then builds the code and certifies its distance.
/// Each entry runs under its own budget of per_entry_budget operations.
std::vector<CatalogResult> run_code_catalog(std::uint64_t per_entry_budget, unsigned threads);

std::string render_code_catalog_text(const std::vector<CatalogResult>& results);
json code_catalog_json(const std::vector<CatalogResult>& results);

}  // namespace ame
