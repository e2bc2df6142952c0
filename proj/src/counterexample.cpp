#include "zpstab/counterexample.hpp"

#include "zpstab/io.hpp"

namespace zpstab {

namespace {

// 9, 10, 11 are shared; only the chain 0..8 differs.
const std::vector<Point> kA{{-77, 188}, {15, 33},  {-64, 92},  {-44, -83},     {30, 4},       {46, -43},
                            {111, -1},  {15, 38},  {160, -18}, {412, -1000000}, {-53, 1000000}, {-468, -1000000}};
const std::vector<Point> kB{{-55, 60},  {57, 126}, {13, 31},   {36, 3},         {70, 72},      {73, 3},
                            {88, 36},   {57, 192}, {164, -96}, {412, -1000000}, {-53, 1000000}, {-468, -1000000}};

}  // namespace

PolygonPair reconstruct_counterexample() { return {load_polygon(kA), load_polygon(kB), {}}; }

std::string counterexample_json_text() {
    const auto p = reconstruct_counterexample();
    return nlohmann::json{{"A", polygon_to_json(p.a)}, {"B", polygon_to_json(p.b)}}.dump(2) + "\n";
}

}  // namespace zpstab
