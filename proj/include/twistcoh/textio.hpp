#ifndef TWISTCOH_TEXTIO_HPP
#define TWISTCOH_TEXTIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/modules.hpp"

namespace twc {

// Positioned parse failure; kind is SyntaxError, ValidationError or DanglingReference.
class ParseError : public Error {
public:
    ParseError(std::string kind, const std::string& msg, std::string source, int line, int col,
               std::string entity = "", std::string cause = "")
        : Error(std::move(kind), msg),
          source(std::move(source)),
          line(line),
          col(col),
          entity(std::move(entity)),
          cause(std::move(cause)) {}
    std::string source;
    int line = 0, col = 0;
    std::string entity;
    std::string cause;  // kind of the underlying validation failure
};

struct Workspace {
    std::vector<std::string> algebra_order, morphism_order, module_order;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, FrobeniusForm> forms;
    std::map<std::string, AlgebraMorphism> morphisms;
    std::map<std::string, std::string> morphism_algebra;
    std::map<std::string, Module> modules;
    std::map<std::string, std::string> module_algebra;
    std::map<std::string, std::string> provenance;  // entity -> source:line

    // lookups throw DanglingReference
    const AlgebraPtr& algebra(const std::string& name) const;
    const AlgebraMorphism& morphism(const std::string& name) const;
    const Module& module(const std::string& name) const;
    // the single algebra when `name` is empty
    const AlgebraPtr& algebra_or_only(const std::string& name) const;
    std::string algebra_name(const AlgebraPtr& a) const;
};

// Adds the entities of `text` to ws; names must be new per kind.
void parse_into(Workspace& ws, const std::string& text, const std::string& source = "<input>");
Workspace parse_text(const std::string& text, const std::string& source = "<input>");
Workspace load_files(const std::vector<std::string>& paths);

std::string emit_algebra(const std::string& name, const Algebra& a, const FrobeniusForm* form = nullptr);
std::string emit_morphism(const std::string& name, const std::string& algebra, const AlgebraMorphism& m);
std::string emit_module(const std::string& name, const std::string& algebra, const Module& m);
std::string emit_workspace(const Workspace& ws);

// Lq with its form, nu, and the modules M_(1,1), M_(1,2), M_(1,-1), M_(1,0), M_(0,1), k, Lambda.
Workspace builtin_workspace(const Scalar& q);

}  // namespace twc

#endif
