#include <bfly/catalog.hpp>
#include <bfly/corpus.hpp>
#include <bfly/json_io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace bfly;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"write the desk corpus of crossed modules and butterflies as JSON"};
  std::string dir = "corpus";
  std::uint32_t seed = 1;
  int per_pair = 1, max_e = 64;
  app.add_option("--dir", dir, "output directory");
  app.add_option("--seed", seed, "mt19937 seed");
  app.add_option("--per-pair", per_pair, "samples per ordered pair and origin");
  app.add_option("--max-e", max_e, "largest |E| kept");
  CLI11_PARSE(app, argc, argv);

  try {
    corpus::Corpus c = corpus::generate(seed, per_pair, max_e);
    fs::create_directories(fs::path(dir) / "xmod");
    fs::create_directories(fs::path(dir) / "butterfly");
    io::Json index{{"seed", seed}, {"xmods", io::Json::array()}, {"butterflies", io::Json::array()}};
    for (size_t i = 0; i < c.nodes.size(); ++i) {
      std::string file = "xmod/" + std::to_string(i) + ".json";
      std::ofstream(fs::path(dir) / file) << io::to_json(c.nodes[i].x).dump() << "\n";
      index["xmods"].push_back({{"file", file}, {"name", c.nodes[i].name}});
    }
    for (size_t k = 0; k < c.edges.size(); ++k) {
      const corpus::Edge& e = c.edges[k];
      std::string file = "butterfly/" + std::to_string(k) + ".json";
      std::ofstream(fs::path(dir) / file) << io::to_json(e.b).dump() << "\n";
      index["butterflies"].push_back({{"file", file},
                                      {"from", e.from},
                                      {"to", e.to},
                                      {"origin", e.origin},
                                      {"e", catalog::describe(e.b.e)}});
    }
    std::ofstream(fs::path(dir) / "index.json") << index.dump(2) << "\n";
    std::cout << c.nodes.size() << " crossed modules, " << c.edges.size() << " butterflies written to " << dir << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
