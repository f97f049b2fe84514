use std::io::BufReader;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use clap::Parser;
use pvk_service::{router, Service};

#[derive(Parser)]
#[command(name = "pvk-service", version, about = "Proving sessions over HTTP/JSON")]
struct Args {
    #[arg(long, env = "PVK_PORT", default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
    /// JSON-lines event log. Existing entries are replayed at startup.
    #[arg(long, env = "PVK_EVENT_LOG")]
    event_log: Option<PathBuf>,
}

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    tracing_subscriber::fmt()
        .with_env_filter(tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()))
        .init();
    let args = Args::parse();

    let service = Service::with_stdlib()?;
    if let Some(path) = &args.event_log {
        if path.exists() {
            let n = service
                .replay(BufReader::new(std::fs::File::open(path)?))
                .map_err(|e| format!("{}: {}", e.code, e.message))?;
            tracing::info!(events = n, log = %path.display(), "replayed event log");
        }
        service.log_to(path)?;
    }

    let addr: SocketAddr = format!("{}:{}", args.host, args.port).parse()?;
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!(%addr, "listening");
    axum::serve(listener, router(Arc::new(service)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
