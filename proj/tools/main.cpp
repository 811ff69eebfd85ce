#include <iostream>

#include "commands.hpp"
#include "stl/index_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"stable tree labelling: dynamic distance oracle for road networks"};
    app.require_subcommand(1);
    stl::cli::add_build(app);
    stl::cli::add_query(app);
    stl::cli::add_update(app);
    stl::cli::add_bench(app);
    stl::cli::add_verify(app);
    stl::cli::add_gen_workload(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here with exit code 0; anything else is a usage error.
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const stl::cli::VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const stl::IndexError& e) {
        // A damaged or foreign index failed its integrity checks.
        std::cerr << "index error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
