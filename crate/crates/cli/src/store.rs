//! Reading and writing record files.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::Path;

use bioibe::record::{KeyStoreRecord, Role};
use bioibe::{
    AttributeSet, MasterKey, PublicParams, ScalarField, SecretKey, SketchPar, TransparentPairing,
};

use crate::error::{usage, CliError, CliResult};

pub type Tp = TransparentPairing;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn read_bytes(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(io_err(path))
}

/// Writes `contents`, refusing to replace an existing file unless `force`.
/// Private files are created with mode 0600 on Unix.
pub fn write_file(path: &Path, contents: &[u8], force: bool, private: bool) -> CliResult<()> {
    if path.exists() && !force {
        return Err(usage(format!(
            "{} already exists; pass --force to overwrite",
            path.display()
        )));
    }
    let mut opts = OpenOptions::new();
    opts.write(true).create(true).truncate(true);
    #[cfg(unix)]
    if private {
        use std::os::unix::fs::OpenOptionsExt;
        opts.mode(0o600);
    }
    let mut file = opts.open(path).map_err(io_err(path))?;
    #[cfg(unix)]
    if private {
        use std::os::unix::fs::PermissionsExt;
        file.set_permissions(fs::Permissions::from_mode(0o600))
            .map_err(io_err(path))?;
    }
    file.write_all(contents).map_err(io_err(path))
}

pub fn write_record(path: &Path, record: &KeyStoreRecord, force: bool) -> CliResult<()> {
    let private = record.role == Role::MasterKey;
    write_file(path, record.to_json().as_bytes(), force, private)
}

pub fn read_record(path: &Path, role: Role) -> CliResult<KeyStoreRecord> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    KeyStoreRecord::from_json_expecting(&text, role)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: bioibe::Result<T>) -> CliResult<T> {
    r.map_err(|e| usage(format!("{}: {e}", path.display())))
}

pub fn load_pp(path: &Path) -> CliResult<PublicParams<Tp>> {
    let rec = read_record(path, Role::PublicParams)?;
    in_file(path, PublicParams::from_bytes(&rec.payload))
}

pub fn load_msk(path: &Path, pp: &PublicParams<Tp>) -> CliResult<MasterKey> {
    let rec = read_record(path, Role::MasterKey)?;
    in_file(path, MasterKey::from_bytes(pp.field(), &rec.payload))
}

pub fn load_sk(path: &Path, pp: &PublicParams<Tp>) -> CliResult<SecretKey<Tp>> {
    let rec = read_record(path, Role::SecretKey)?;
    in_file(path, SecretKey::from_bytes(pp, &rec.payload))
}

pub fn load_par(path: &Path) -> CliResult<SketchPar> {
    let rec = read_record(path, Role::SketchPar)?;
    in_file(path, SketchPar::from_bytes(&rec.payload))
}

/// Comma-separated decimal attributes, e.g. `3,17,42`.
pub fn parse_attrs(field: &ScalarField, list: &str) -> CliResult<AttributeSet> {
    let attrs = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| field.parse_decimal(s))
        .collect::<bioibe::Result<Vec<_>>>()?;
    Ok(AttributeSet::new(attrs)?)
}
