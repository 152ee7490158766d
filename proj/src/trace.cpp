// Copyright 2026 The sbovqa authors
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

#include "sbovqa/trace.hpp"

#include <sstream>

#include <json.hpp>

#include "sbovqa/io.hpp"

namespace sbovqa {

namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd &v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back(v[i]);
    }
    return arr;
}

Eigen::VectorXd vector_from_json(const json &arr) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    }
    return v;
}

json matrix_to_json(const Eigen::MatrixXd &m) {
    json cols = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        cols.push_back(vector_to_json(m.col(c)));
    }
    return cols;
}

Eigen::MatrixXd matrix_from_json(const json &cols, Eigen::Index rows) {
    Eigen::MatrixXd m(rows, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        m.col(static_cast<Eigen::Index>(c)) = vector_from_json(cols[c]);
    }
    return m;
}

} // namespace

std::string trace_to_csv(const RunTrace &trace) {
    std::ostringstream out;
    const Eigen::Index dim =
        trace.records.empty() ? trace.theta_opt.size()
                              : trace.records.front().center.size();
    out << "iter";
    for (Eigen::Index d = 0; d < dim; ++d) {
        out << ",center_" << d;
    }
    out << ",epsilon,best_value,shots\n";
    for (const auto &rec : trace.records) {
        out << rec.iteration;
        for (Eigen::Index d = 0; d < dim; ++d) {
            out << "," << format_double(rec.center[d]);
        }
        out << "," << format_double(rec.epsilon) << ","
            << format_double(rec.best_value) << "," << rec.shots << "\n";
    }
    return out.str();
}

std::string trace_to_json(const RunTrace &trace) {
    json doc;
    doc["optimizer"] = trace.optimizer;
    doc["total_shots"] = trace.total_shots;
    doc["theta_opt"] = vector_to_json(trace.theta_opt);
    json minima = json::array();
    for (const auto &m : trace.minima) {
        minima.push_back(vector_to_json(m));
    }
    doc["minima"] = minima;
    json records = json::array();
    for (const auto &rec : trace.records) {
        json r;
        r["iteration"] = rec.iteration;
        r["center"] = vector_to_json(rec.center);
        r["samples"] = matrix_to_json(rec.samples);
        r["values"] = vector_to_json(rec.values);
        r["iterate"] = vector_to_json(rec.iterate);
        r["epsilon"] = rec.epsilon;
        r["best_value"] = rec.best_value;
        r["shots"] = rec.shots;
        r["entered_minima"] = rec.entered_minima;
        records.push_back(std::move(r));
    }
    doc["records"] = records;
    return doc.dump(2) + "\n";
}

RunTrace trace_from_json(const std::string &text) {
    const json doc = json::parse(text);
    RunTrace trace;
    trace.optimizer = doc.at("optimizer").get<std::string>();
    trace.total_shots = doc.at("total_shots").get<long long>();
    trace.theta_opt = vector_from_json(doc.at("theta_opt"));
    for (const auto &m : doc.at("minima")) {
        trace.minima.push_back(vector_from_json(m));
    }
    const Eigen::Index dim = trace.theta_opt.size();
    for (const auto &r : doc.at("records")) {
        IterationRecord rec;
        rec.iteration = r.at("iteration").get<int>();
        rec.center = vector_from_json(r.at("center"));
        rec.samples = matrix_from_json(r.at("samples"), dim);
        rec.values = vector_from_json(r.at("values"));
        rec.iterate = vector_from_json(r.at("iterate"));
        rec.epsilon = r.at("epsilon").get<double>();
        rec.best_value = r.at("best_value").get<double>();
        rec.shots = r.at("shots").get<long long>();
        rec.entered_minima = r.at("entered_minima").get<bool>();
        trace.records.push_back(std::move(rec));
    }
    return trace;
}

} // namespace sbovqa
