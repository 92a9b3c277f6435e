#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "polyfree/dbcp.hpp"
#include "polyfree/graph.hpp"
#include "polyfree/tower.hpp"

namespace polyfree {

struct CliOptions {
    bool json = false;
    int depth = 4;
    std::string set_arg;             // --set v1,v2,...
    bool set_given = false;
    std::optional<int> colors;       // tower --colors
    std::optional<int> max_vertices; // overrides every solver cap
};

struct CommandResult {
    nlohmann::ordered_json data;
    std::string text;
    int exit_code = 0;
};

CommandResult cmd_analyze(const std::string& file, const CliOptions& opt);
CommandResult cmd_normalize(const std::string& file, const std::string& word,
                            const CliOptions& opt);
CommandResult cmd_tower(const std::string& file, const CliOptions& opt);
CommandResult cmd_table(const std::string& file, const CliOptions& opt);
CommandResult cmd_verify(const std::string& file, const CliOptions& opt);

// Exit codes: 0 ok, 1 input error, 2 verification failure, 3 resource cap.
int run_cli(int argc, const char* const* argv);

} // namespace polyfree
