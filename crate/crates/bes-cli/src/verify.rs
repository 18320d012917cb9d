//! The `verify` subcommand: check a certificate file against its host.

use std::path::Path;

use crate::certs::{verify_cert, CertJson};
use crate::exit::{input_error, CliResult};
use crate::format::parse_host;

pub fn verify(cert_path: &Path, host_path: &Path) -> CliResult {
    let cert_text = std::fs::read_to_string(cert_path)
        .map_err(|e| input_error(format!("{}: {e}", cert_path.display())))?;
    let cert: CertJson = serde_json::from_str(&cert_text)
        .map_err(|e| input_error(format!("{}: {e}", cert_path.display())))?;
    let host_bytes = std::fs::read(host_path)
        .map_err(|e| input_error(format!("{}: {e}", host_path.display())))?;
    let host_text = std::str::from_utf8(&host_bytes)
        .map_err(|_| input_error(format!("{}: not utf-8 text", host_path.display())))?;
    let host =
        parse_host(host_text).map_err(|e| input_error(format!("{}: {e}", host_path.display())))?;
    match verify_cert(&cert, &host_bytes, &host.graph) {
        Ok(summary) => {
            println!("ok {summary}");
            Ok(())
        }
        Err(reason) => Err(input_error(format!("certificate rejected: {reason}"))),
    }
}
