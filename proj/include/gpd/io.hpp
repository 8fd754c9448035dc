#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpd/correspondence.hpp"
#include "gpd/reptheory.hpp"

namespace gpd {

/* Single-file JSON documents with a "kind" discriminator.  Serialization is
 * canonical: two-space indent, keys in lexicographic order, one trailing
 * newline, rationals as "p/q" strings and complex values as [re, im] pairs,
 * so serialize(parse(serialize(x))) is byte-identical to serialize(x).
 * Parsers check shapes and cross-references only; the mathematical
 * validators stay where they are and run when something is built. */

// kind: "groupoid"
std::string serialize_groupoid(const Groupoid& g);
Groupoid parse_groupoid(const std::string& text);

/* Everything build_correspondence takes, plus optional named test functions
 * on the points that the check suites run through the bounded checks. */
struct CorrespondenceDoc {
  std::string id;
  Groupoid g, h;
  HaarSystem alpha, beta;
  Bispace x;
  MeasureFamily lam;
  std::vector<std::pair<std::string, Fn<CQ>>> functions;

  Correspondence build() const;
};

// kind: "correspondence"
std::string serialize_correspondence(const CorrespondenceDoc& d);
std::string serialize_correspondence(const Correspondence& c, const std::string& id);
CorrespondenceDoc parse_correspondence(const std::string& text);

// kind: "module" (the export format of cmd_export_module)
std::string serialize_module(const HilbertModuleData& m);
HilbertModuleData parse_module(const std::string& text);

/* kind: "workspace" -- named sections referencing each other by name.
 * Parsing resolves every reference and throws InputError naming the first
 * dangling one. */
struct Workspace {
  struct HaarRef {
    std::string groupoid;
    std::vector<Rational> weights;
  };
  struct BispaceRef {
    std::string left, right;
    Bispace x;  // tables sized against the referenced groupoids
  };
  struct FamilyRef {
    std::string bispace;
    std::vector<Rational> mass;
  };
  struct CorrRef {
    std::string left_haar, right_haar, bispace, family;
  };
  struct BundleRef {
    std::string groupoid;
    RepBundle rep;
  };

  std::map<std::string, Groupoid> groupoids;
  std::map<std::string, HaarRef> haars;
  std::map<std::string, BispaceRef> bispaces;
  std::map<std::string, FamilyRef> families;
  std::map<std::string, CorrRef> correspondences;
  std::map<std::string, BundleRef> repbundles;

  /* Assembles the named correspondence; throws InputError when the chain of
   * references is inconsistent (wrong groupoid under a haar, wrong bispace
   * under a family). */
  CorrespondenceDoc resolve(const std::string& name) const;
};

std::string serialize_workspace(const Workspace& w);
Workspace parse_workspace(const std::string& text);

/* Peeks at the discriminator; InputError on malformed JSON or missing kind. */
std::string document_kind(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gpd
