use std::io;

fn main() {
    let stdin = io::stdin();
    let code = acl::harness::cli::main_with(
        std::env::args_os(),
        std::env::var("ACL_SEED").ok(),
        &mut stdin.lock(),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
