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

#include "sbovqa/serialize.hpp"

#include <json.hpp>

namespace sbovqa {

std::string surrogate_to_json(const SurrogateModel<double> &model) {
    nlohmann::json doc;
    doc["bandwidth"] = model.bandwidth;
    doc["dimension"] = model.dimension();
    nlohmann::json points = nlohmann::json::array();
    nlohmann::json values = nlohmann::json::array();
    for (Eigen::Index j = 0; j < model.sample_count(); ++j) {
        nlohmann::json point = nlohmann::json::array();
        for (Eigen::Index d = 0; d < model.dimension(); ++d) {
            point.push_back(model.points(d, j));
        }
        points.push_back(std::move(point));
        values.push_back(model.values[j]);
    }
    doc["points"] = points;
    doc["values"] = values;
    return doc.dump(2) + "\n";
}

SurrogateModel<double> surrogate_from_json(const std::string &text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    const auto dim = doc.at("dimension").get<Eigen::Index>();
    const auto &points = doc.at("points");
    const auto &values = doc.at("values");
    Eigen::MatrixXd locations(dim, static_cast<Eigen::Index>(points.size()));
    Eigen::VectorXd sample_values(static_cast<Eigen::Index>(values.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (Eigen::Index d = 0; d < dim; ++d) {
            locations(d, static_cast<Eigen::Index>(j)) =
                points[j][static_cast<std::size_t>(d)].get<double>();
        }
        sample_values[static_cast<Eigen::Index>(j)] = values[j].get<double>();
    }
    return fit<double>(locations, sample_values,
                       doc.at("bandwidth").get<double>());
}

std::string scaling_fit_to_json(const ScalingFit &fitted) {
    nlohmann::json doc;
    doc["alpha"] = fitted.alpha;
    doc["beta"] = fitted.beta;
    doc["residual"] = fitted.residual_norm;
    return doc.dump(2) + "\n";
}

} // namespace sbovqa
