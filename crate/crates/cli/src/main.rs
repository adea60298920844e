//! `semiwedge`: verification harness for exterior semialgebras over exact
//! semirings — eigen pairs, derivation laws, quasi-inverses, and the
//! Cayley-Hamilton balance identity.

mod cli;
mod gen;
mod input;
mod report;
mod run;

use clap::Parser;

fn main() {
    let parsed = cli::Cli::parse();
    std::process::exit(run::run(&parsed));
}
