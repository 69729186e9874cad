#pragma once

// JSON descriptions of rings, algebras, contexts, factorizations, morphisms
// and windows. Nested objects may be given inline or as a path string,
// resolved against the directory of the file that mentions it.

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mfact/functors.hpp"

namespace mfact {

using json = nlohmann::ordered_json;

/// Location inside an input: file plus JSON pointer.
struct Where {
    std::filesystem::path file;
    std::string pointer;

    Where operator/(const std::string& key) const { return Where{file, pointer + "/" + key}; }
    Where operator/(std::size_t index) const { return Where{file, pointer + "/" + std::to_string(index)}; }
    std::string to_string() const { return file.string() + ":" + (pointer.empty() ? "/" : pointer); }
};

class InputError : public std::runtime_error {
public:
    InputError(const Where& at, const std::string& what)
        : std::runtime_error(at.to_string() + ": " + what), where(at) {}
    Where where;
};

json read_json_file(const std::filesystem::path& path);

std::shared_ptr<const QuotientRing> parse_ring(const json& j, const Where& at);
std::shared_ptr<const FDAlgebra> parse_algebra(const json& j, const Where& at);
/// Ring if the description has "vars", algebra if it has "gens".
std::shared_ptr<const Backend> parse_backend(const json& j, const Where& at);
std::shared_ptr<const Context> parse_context(const json& j, const Where& at);
Elem parse_elem(const Backend& B, const json& j, const Where& at);
EMatrix parse_ematrix(const Backend& B, const json& j, std::size_t rows, std::size_t cols, const Where& at);
FactPtr parse_factorization(const json& j, const Where& at, const FactOptions& opts = {});
/// Morphism between the factorizations named by "source" and "target"
/// (an endomorphism when "target" is absent).
FactMorphism parse_morphism(const json& j, const Where& at, const FactOptions& opts = {});
GradedHom parse_graded(const json& j, const Where& at, const FactOptions& opts = {});
ComplexWindow parse_window(const json& j, const Where& at);

json to_json(const QuotientRing& R);
json to_json(const FDAlgebra& A);
json to_json(const Backend& B);
json to_json(const Context& ctx);
json to_json(const Backend& B, const EMatrix& m);
json to_json(const Backend& B, const EMatrices& ms);
json to_json(const Factorization& X);
/// Components only, to keep reports small.
json to_json(const FactMorphism& phi);
json to_json(const GradedHom& phi);
json to_json(const ComplexWindow& C);
json to_json(const NoSolutionCertificate& c);

}  // namespace mfact
