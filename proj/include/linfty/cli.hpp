#pragma once

// Document format and command runner for the linfty tool.
//
// Every document is one JSON object with a "kind" tag. Rationals appear only
// inside strings ("1/2*x"), words are written "(x,y)" and structure maps are
// keyed by weight. Other documents are referenced by path, relative to the
// directory of the referencing file.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "linfty/homotopy.hpp"
#include "linfty/lemma_one.hpp"

namespace linf::cli {

enum ExitCode { pass = 0, failure = 1, input_error = 2 };

struct AlgebraDoc {
    LInftyStructure algebra;
};

struct MorphismDoc {
    std::string source_ref;
    std::string target_ref;
    MorphismComponents morphism;
};

struct MCDoc {
    std::string algebra_ref;
    LInftyStructure algebra;
    Element element;
};

/// A single multilinear map between the spaces of two algebras.
struct MapDoc {
    std::string source_ref;
    std::string target_ref;
    MultiMap map;
};

struct RequestDoc {
    std::string morphism_ref;
    std::string map_ref;
    PerturbationRequest request;
};

/// h = h0 + dt h1 between the morphisms `from` and `to`, in U coordinates.
struct HomotopyDoc {
    std::string from_ref;
    std::string to_ref;
    MorphismComponents from;
    MorphismComponents to;
    HomotopyElement h;
};

using Document = std::variant<AlgebraDoc, MorphismDoc, MCDoc, MapDoc, RequestDoc, HomotopyDoc>;

/// Parses a document; references are resolved against `base`. A cap override
/// replaces the document cap and is passed on to referenced documents.
Document parse_document(std::string_view text, const std::filesystem::path& base,
                        std::optional<int> cap = std::nullopt);
Document load_document(const std::filesystem::path& path, std::optional<int> cap = std::nullopt);

/// Canonical form: two-space indentation, fixed key order, canonical words,
/// trailing newline.
std::string serialize(const Document& doc);
std::string serialize_algebra(const LInftyStructure& L);

/// Structure maps above `cap` are dropped; missing ones are zero.
LInftyStructure recap(const LInftyStructure& L, int cap);

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linf::cli
