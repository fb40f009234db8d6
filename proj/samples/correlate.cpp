// Point-biserial correlation of bag-of-words features with a 0/1 label.
// Input is TSV: label<TAB>text, one document per line.
//   sample_correlate docs.tsv

#include <fstream>
#include <iostream>

#include "misinfo/misinfo.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " LABELED_TSV\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << '\n';
    return 2;
  }
  std::vector<std::string> docs;
  std::vector<int> labels;
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    labels.push_back(line.substr(0, tab) == "1" ? 1 : 0);
    docs.push_back(line.substr(tab + 1));
  }
  try {
    const auto features = misinfo::select_bow_features(docs);
    const auto tables = misinfo::top_correlated(misinfo::bow_matrix(docs, features), labels);
    std::cout << tables.to_csv();
  } catch (const misinfo::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
