#pragma once

#include <map>
#include <string>
#include <vector>

namespace fthresh {

struct GalleryRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct GalleryOptions {
    std::string filter;                              // substring match on the fixture name
    std::map<std::string, std::string> overrides;  // name -> replacement expected value
};

std::vector<std::string> gallery_names();
std::vector<GalleryRow> verify_examples(const GalleryOptions& opts = {});

}  // namespace fthresh
