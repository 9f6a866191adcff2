#include <nlohmann/json.hpp>

#include "adsig/design.hpp"

namespace adsig {

using ordered_json = nlohmann::ordered_json;

std::string design_to_json(const Design& d) {
    ordered_json j;
    j["v"] = d.v;
    j["blocks"] = d.blocks;
    j["parallel_classes"] = d.parallel_classes;
    return j.dump(2) + "\n";
}

Design design_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid design JSON: ") + e.what());
    }
    Design d;
    try {
        d.v = j.at("v").get<int>();
        d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        d.parallel_classes = j.at("parallel_classes").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid design JSON: ") + e.what());
    }

    // Structural invariants the file format promises: ascending point lists,
    // indices in range, classes partitioning the block set.
    if (d.v < 1) throw std::invalid_argument("invalid design JSON: v must be positive");
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 0 || block[i] >= d.v)
                throw std::invalid_argument("invalid design JSON: point index out of range");
            if (i > 0 && block[i] <= block[i - 1])
                throw std::invalid_argument(
                    "invalid design JSON: block point lists must be strictly ascending");
        }
    }
    std::vector<int> seen(d.blocks.size(), 0);
    for (const auto& cls : d.parallel_classes)
        for (int idx : cls) {
            if (idx < 0 || idx >= static_cast<int>(d.blocks.size()))
                throw std::invalid_argument("invalid design JSON: block index out of range");
            seen[static_cast<std::size_t>(idx)] += 1;
        }
    for (int count : seen)
        if (count != 1)
            throw std::invalid_argument(
                "invalid design JSON: parallel classes must partition the block list");
    return d;
}

}  // namespace adsig
