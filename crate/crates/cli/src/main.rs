use std::io;

fn main() {
    let code = mirrorgraph_cli::run_to(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
