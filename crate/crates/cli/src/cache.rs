//! Append-only memo cache: a header line, then one JSON record per line.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use saxllab::{Engine, MemoStore, Partition};
use serde::{Deserialize, Serialize};

pub const HEADER: &str = "saxllab-cache v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Table {
    Mn,
    Morris,
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    t: Table,
    l: Vec<u16>,
    a: Vec<u16>,
    v: String,
}

type Key = (Table, Partition, Partition);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    New,
    Append,
    ReadOnly,
}

pub struct Cache {
    path: PathBuf,
    known: HashSet<Key>,
    mode: Mode,
}

fn store(engine: &Engine, t: Table) -> &MemoStore {
    match t {
        Table::Mn => engine.mn_store(),
        Table::Morris => engine.morris_store(),
    }
}

fn parse(line: &str) -> Result<(Key, BigInt), String> {
    let r: Record = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let l = Partition::new(r.l).map_err(|e| e.to_string())?;
    let a = Partition::new(r.a).map_err(|e| e.to_string())?;
    if l.n() != a.n() {
        return Err(format!("sizes {} and {} differ", l.n(), a.n()));
    }
    let v: BigInt = r.v.parse().map_err(|e| format!("value {:?}: {e}", r.v))?;
    Ok(((r.t, l, a), v))
}

impl Cache {
    /// Loads every readable record into the engine's memo stores.
    pub fn load(path: &Path, engine: &Engine) -> std::io::Result<Cache> {
        let mut cache = Cache { path: path.to_path_buf(), known: HashSet::new(), mode: Mode::New };
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e),
        };
        let mut lines = BufReader::new(file).lines();
        match lines.next().transpose()? {
            Some(h) if h.trim() == HEADER => cache.mode = Mode::Append,
            Some(h) => {
                eprintln!("warning: {}: unrecognised cache header {h:?}; cache ignored", path.display());
                cache.mode = Mode::ReadOnly;
                return Ok(cache);
            }
            None => return Ok(cache),
        }
        for (i, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match parse(&line) {
                Ok(((t, l, a), v)) => {
                    if !store(engine, t).try_insert(l.clone(), a.clone(), v) {
                        eprintln!("warning: {}:{}: conflicting duplicate entry skipped", path.display(), i + 2);
                        continue;
                    }
                    cache.known.insert((t, l, a));
                }
                Err(e) => eprintln!("warning: {}:{}: skipped unreadable entry: {e}", path.display(), i + 2),
            }
        }
        Ok(cache)
    }

    /// Appends every memo entry not already on disk.
    pub fn flush(&self, engine: &Engine) -> std::io::Result<usize> {
        let mut out = match self.mode {
            Mode::ReadOnly => return Ok(0),
            Mode::New => {
                let mut out = BufWriter::new(File::create(&self.path)?);
                writeln!(out, "{HEADER}")?;
                out
            }
            Mode::Append => BufWriter::new(OpenOptions::new().append(true).open(&self.path)?),
        };
        let mut written = 0;
        for t in [Table::Mn, Table::Morris] {
            for (l, a, v) in store(engine, t).entries() {
                if self.known.contains(&(t, l.clone(), a.clone())) {
                    continue;
                }
                let r = Record { t, l: l.parts().to_vec(), a: a.parts().to_vec(), v: v.to_string() };
                serde_json::to_writer(&mut out, &r)?;
                out.write_all(b"\n")?;
                written += 1;
            }
        }
        out.flush()?;
        Ok(written)
    }
}
